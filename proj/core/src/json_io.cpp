#include "btalg/json_io.hpp"

#include "btalg/oracle.hpp"

namespace btalg::io {

json to_json(const GaussianRational& x) {
  return json{{"re", rational_to_string(x.re)}, {"im", rational_to_string(x.im)}};
}

GaussianRational gr_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    throw MalformedInput("Gaussian rational must be {re, im}");
  }
  return {parse_rational(j.at("re").get<std::string>()),
          parse_rational(j.at("im").get<std::string>())};
}

json to_json(const Poly& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p.coeff(i)));
  return arr;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInput("polynomial must be an array");
  std::vector<GaussianRational> coeffs;
  for (const auto& c : j) coeffs.push_back(gr_from_json(c));
  return Poly(std::move(coeffs));
}

json to_json(const MatrixD& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixD matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw MalformedInput("matrix must be a nested array");
  int d = static_cast<int>(j.size());
  MatrixD m(d);
  for (int i = 0; i < d; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != d) {
      throw MalformedInput("matrix rows must all have length d");
    }
    for (int c = 0; c < d; ++c) m.at(i, c) = gr_from_json(j[i][c]);
  }
  return m;
}

json to_json(const PMElement& e) {
  return json{{"p", to_json(e.modulus)}, {"residue", to_json(e.residue)}};
}

PMElement pm_from_json(const json& j) {
  return pm_reduce(poly_from_json(j.at("residue")), poly_from_json(j.at("p")));
}

namespace {

template <typename E>
json blocks_to_json(const BlockToeplitz<E>& t, auto entry_to_json) {
  json blocks = json::object();
  for (int off = -(t.n - 1); off <= t.n - 1; ++off) {
    if (entry_is_zero(t.block(off))) continue;
    blocks[std::to_string(off)] = entry_to_json(t.block(off));
  }
  return blocks;
}

}  // namespace

json to_json(const BlockToeplitz<MatrixD>& t) {
  return json{{"n", t.n},
              {"d", t.d()},
              {"entry_type", "matrix"},
              {"blocks", blocks_to_json(t, [](const MatrixD& m) { return to_json(m); })}};
}

json to_json(const BlockToeplitz<PMElement>& t) {
  return json{{"n", t.n},
              {"d", t.d()},
              {"entry_type", "poly_mod_p"},
              {"p", to_json(t.proto().modulus)},
              {"blocks",
               blocks_to_json(t, [](const PMElement& e) { return to_json(e.residue); })}};
}

AnyToeplitz toeplitz_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entry_type")) {
    throw MalformedInput("block Toeplitz must carry n and entry_type");
  }
  int n = j.at("n").get<int>();
  if (n < 1) throw MalformedInput("n must be >= 1");
  std::string entry_type = j.at("entry_type").get<std::string>();
  json blocks = j.value("blocks", json::object());

  auto for_each_offset = [&](auto&& set_block) {
    for (const auto& [key, value] : blocks.items()) {
      int off = std::stoi(key);
      if (off < -(n - 1) || off > n - 1) throw MalformedInput("offset out of range: " + key);
      set_block(off, value);
    }
  };

  if (entry_type == "poly_mod_p") {
    Poly p = poly_from_json(j.at("p"));
    if (!p.is_monic() || p.degree() < 1) throw MalformedInput("p must be monic, deg >= 1");
    BlockToeplitz<PMElement> t(n, pm_reduce(Poly::zero(), p));
    for_each_offset(
        [&](int off, const json& v) { t.block(off) = pm_reduce(poly_from_json(v), p); });
    return t;
  }
  if (entry_type == "matrix") {
    int d = j.at("d").get<int>();
    if (d < 1) throw MalformedInput("d must be >= 1");
    BlockToeplitz<MatrixD> t(n, MatrixD(d));
    for_each_offset([&](int off, const json& v) {
      MatrixD m = matrix_from_json(v);
      if (m.dim() != d) throw MalformedInput("block dimension differs from d");
      t.block(off) = m;
    });
    return t;
  }
  throw MalformedInput("unknown entry_type: " + entry_type);
}

namespace {

template <typename E>
json block_matrix_to_json(const BlockMatrix<E>& m, const char* entry_type,
                          auto entry_to_json) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(entry_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  json out{{"n", m.n}, {"d", entry_dim(m.proto())}, {"entry_type", entry_type},
           {"cells", std::move(rows)}};
  return out;
}

}  // namespace

json to_json(const BlockMatrix<MatrixD>& m) {
  return block_matrix_to_json(m, "matrix", [](const MatrixD& e) { return to_json(e); });
}

json to_json(const BlockMatrix<PMElement>& m) {
  json out = block_matrix_to_json(m, "poly_mod_p",
                                  [](const PMElement& e) { return to_json(e.residue); });
  out["p"] = to_json(m.proto().modulus);
  return out;
}

namespace {

json ext_scalar_to_json(const ExtScalar& a) {
  if (a.infinite) return json("inf");
  return to_json(a.value);
}

ExtScalar ext_scalar_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtScalar::inf();
  return ExtScalar::finite(gr_from_json(j));
}

}  // namespace

json spec_to_json(const AlgebraSpec& spec) {
  json out{{"n", spec.n}, {"d", spec.d}};
  if (const auto* f = std::get_if<PseudocirculantSpec>(&spec.family)) {
    out["variant"] = "pseudocirculant";
    out["A"] = to_json(f->a);
    out["B"] = to_json(f->b);
  } else if (const auto* f = std::get_if<SinglyGenSpec>(&spec.family)) {
    out["variant"] = "singly_gen";
    out["p"] = to_json(f->p);
    out["p_plus"] = to_json(f->p_plus);
    out["p_minus"] = to_json(f->p_minus);
    out["chi"] = to_json(f->chi);
  } else if (const auto* f = std::get_if<DiagonalTupleSpec>(&spec.family)) {
    out["variant"] = "diagonal_tuple";
    json alphas = json::array();
    for (const auto& a : f->alphas) alphas.push_back(ext_scalar_to_json(a));
    out["alphas"] = std::move(alphas);
  } else if (const auto* f = std::get_if<SchurOpqSpec>(&spec.family)) {
    out["variant"] = "schur_opq";
    out["p"] = f->p;
    out["q"] = f->q;
  } else if (std::holds_alternative<UpperTriSpec>(spec.family)) {
    out["variant"] = "upper_tri";
  } else if (std::holds_alternative<LowerTriSpec>(spec.family)) {
    out["variant"] = "lower_tri";
  } else if (const auto* f = std::get_if<ScalarCirculantSpec>(&spec.family)) {
    out["variant"] = "scalar_circulant";
    out["alpha"] = ext_scalar_to_json(f->alpha);
  }
  return out;
}

AlgebraSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variant")) {
    throw MalformedInput("algebra spec must carry a variant tag");
  }
  AlgebraSpec spec;
  spec.n = j.at("n").get<int>();
  spec.d = j.at("d").get<int>();
  if (spec.n < 1 || spec.d < 1) throw MalformedInput("n and d must be >= 1");
  std::string variant = j.at("variant").get<std::string>();
  if (variant == "pseudocirculant") {
    spec.family = make_pseudocirculant(matrix_from_json(j.at("A")),
                                       matrix_from_json(j.at("B")));
  } else if (variant == "singly_gen") {
    spec.family = make_singly_gen(poly_from_json(j.at("p")), poly_from_json(j.at("p_plus")),
                                  poly_from_json(j.at("p_minus")),
                                  poly_from_json(j.at("chi")));
  } else if (variant == "diagonal_tuple") {
    DiagonalTupleSpec f;
    for (const auto& a : j.at("alphas")) f.alphas.push_back(ext_scalar_from_json(a));
    spec.family = std::move(f);
  } else if (variant == "schur_opq") {
    spec.family = SchurOpqSpec{j.at("p").get<int>(), j.at("q").get<int>()};
  } else if (variant == "upper_tri") {
    spec.family = UpperTriSpec{};
  } else if (variant == "lower_tri") {
    spec.family = LowerTriSpec{};
  } else if (variant == "scalar_circulant") {
    spec.family = ScalarCirculantSpec{ext_scalar_from_json(j.at("alpha"))};
  } else {
    throw MalformedInput("unknown variant: " + variant);
  }
  return spec;
}

json report_to_json(const ClassificationReport& report) {
  json out;
  out["spec"] = spec_to_json(report.spec);
  out["s_plus"] = to_json(report.s_plus);
  out["s_minus"] = to_json(report.s_minus);
  out["xi"] = to_json(report.xi);
  out["generic_element"] =
      report.generic_element ? to_json(*report.generic_element) : json(nullptr);
  switch (report.genericity) {
    case Genericity::generic:
      out["genericity"] = "generic";
      break;
    case Genericity::upper:
      out["genericity"] = "upper";
      break;
    case Genericity::lower:
      out["genericity"] = "lower";
      break;
  }
  return out;
}

json strata_to_json(const std::vector<XmStratum>& strata) {
  json arr = json::array();
  for (const auto& s : strata) {
    arr.push_back(json{{"k_plus", s.k_plus},
                       {"k_minus", s.k_minus},
                       {"rigid", s.rigid},
                       {"param_dim", s.param_dim},
                       {"pseudocirculant", s.pseudocirculant}});
  }
  return arr;
}

json verification_report_to_json(const oracle::VerificationReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    json fj{{"trial", f.trial}, {"description", f.description}};
    if (!f.counterexample_json.empty()) {
      fj["counterexample"] = json::parse(f.counterexample_json);
    }
    failures.push_back(std::move(fj));
  }
  return json{{"suite", report.suite},
              {"trials", report.trials},
              {"failures", std::move(failures)},
              {"elapsed_seconds", report.elapsed_seconds}};
}

GeneratorSet<PMElement> generators_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array()) {
    throw MalformedInput("expected {generators: [...]}");
  }
  GeneratorSet<PMElement> gens;
  for (const auto& g : j.at("generators")) {
    AnyToeplitz t = toeplitz_from_json(g);
    auto* pm = std::get_if<BlockToeplitz<PMElement>>(&t);
    if (!pm) throw MalformedInput("generators must have entry_type poly_mod_p");
    gens.push_back(std::move(*pm));
  }
  return gens;
}

}  // namespace btalg::io

#ifndef BTALG_JSON_IO_HPP
#define BTALG_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <variant>

#include "btalg/algebras.hpp"
#include "btalg/classify.hpp"

namespace btalg {

namespace oracle {
struct VerificationReport;
}

namespace io {

using nlohmann::json;

// Rationals travel as exact strings ("num/den" or "num"), never floats.
json to_json(const GaussianRational& x);
GaussianRational gr_from_json(const json& j);

// Polynomial: array of Gaussian rationals, index 0 = constant term.
json to_json(const Poly& p);
Poly poly_from_json(const json& j);

// Matrix: row-major nested arrays.
json to_json(const MatrixD& m);
MatrixD matrix_from_json(const json& j);

json to_json(const PMElement& e);
PMElement pm_from_json(const json& j);

// BlockToeplitz: {"n", "d", "entry_type": "matrix"|"poly_mod_p",
// "p": poly (poly_mod_p only), "blocks": {"-1": entry, ...}};
// absent offsets mean zero.
json to_json(const BlockToeplitz<MatrixD>& t);
json to_json(const BlockToeplitz<PMElement>& t);

using AnyToeplitz = std::variant<BlockToeplitz<MatrixD>, BlockToeplitz<PMElement>>;
AnyToeplitz toeplitz_from_json(const json& j);

json to_json(const BlockMatrix<MatrixD>& m);
json to_json(const BlockMatrix<PMElement>& m);

json spec_to_json(const AlgebraSpec& spec);
AlgebraSpec spec_from_json(const json& j);

json report_to_json(const ClassificationReport& report);

json strata_to_json(const std::vector<XmStratum>& strata);

json verification_report_to_json(const oracle::VerificationReport& report);

// {"generators": [block Toeplitz, ...]} with entries in P(M).
GeneratorSet<PMElement> generators_from_json(const json& j);

}  // namespace io
}  // namespace btalg

#endif  // BTALG_JSON_IO_HPP

#ifndef Z2DYN_REPORT_HPP
#define Z2DYN_REPORT_HPP

#include <string>

#include <json.hpp>

#include "z2dyn/cheb_decomposition.hpp"
#include "z2dyn/decomposition.hpp"
#include "z2dyn/dynamics.hpp"

namespace z2dyn {

/// All reports use insertion-ordered JSON so output is byte-stable.
/// Numbers that may exceed 64 bits (centers, coefficients, measures) are
/// serialized as decimal strings.
using Json = nlohmann::ordered_json;

/// {"schema_version":"1", "command": ..., "payload": ...}
Json report_envelope(Json command, Json payload);

/// {"schema_version":"1", "error": {"code": ..., "message": ...}}
/// code is one of "usage", "parse", "budget", "internal".
Json error_document(const std::string& code, const std::string& message);

Json ball_to_json(const Ball& b);
Json decomposition_to_json(const Decomposition& d);
Json classification_to_json(const std::string& poly_text, int level,
                            const std::vector<Cycle>& cycles,
                            const std::vector<CycleClass>& classes);
Json verification_to_json(const VerificationReport& r);
Json coeff_report_to_json(long m, const IntPolynomial& T, const CoeffValuationReport* check);
Json minimality_to_json(const std::string& poly_text, const std::vector<Ball>& balls,
                        int check_level, bool minimal);

std::string decomposition_to_text(const Decomposition& d);
std::string classification_to_text(int level, const std::vector<Cycle>& cycles,
                                   const std::vector<CycleClass>& classes);
std::string verification_to_text(const VerificationReport& r);
std::string coeff_report_to_text(long m, const IntPolynomial& T,
                                 const CoeffValuationReport* check);
std::string minimality_to_text(const std::vector<Ball>& balls, int check_level, bool minimal);

}  // namespace z2dyn

#endif  // Z2DYN_REPORT_HPP

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "monometric/channels.hpp"
#include "monometric/hermitian.hpp"

namespace monometric {

/// {"n": int, "re": [[...]], "im": [[...]]}, row-major; "im" may be omitted.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// {"n_in": int, "n_out": int, "kraus": [matrix, ...]}; Kraus operators are
/// n_out x n_in and use the matrix format with "rows"/"cols" replacing "n".
KrausChannel channel_from_json(const nlohmann::json& j);
nlohmann::json channel_to_json(const KrausChannel& ch);

/// Parses a file; throws Error(parse) with the path in the message.
nlohmann::json read_json_file(const std::string& path);

/// Comma-separated decimals or a JSON array of numbers.
std::vector<double> parse_real_list(std::string_view text);

/// Comma-separated entries, each a real number or "re:im".
std::vector<Complex> parse_complex_list(std::string_view text);

}  // namespace monometric

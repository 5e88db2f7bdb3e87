#ifndef QPTHETA_IO_HPP
#define QPTHETA_IO_HPP

#include "qptheta/bargmann.hpp"
#include "qptheta/fock.hpp"
#include "qptheta/landau.hpp"

#include <json.hpp>

#include <string>

namespace qptheta
{

/// Malformed command-line or JSON input.
class InputError : public Error
{
public:
    using Error::Error;
};

/// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" (no embedded spaces).
Complex parse_complex(const std::string &text);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json &j);

// {"nu": R, "alpha": R, "coeffs": [{"n": Z, "re": R, "im": R}, ...]}
nlohmann::json to_json(const FockElement &elem);
FockElement fock_from_json(const nlohmann::json &j);

// {"alpha": R, "coeffs": [{"n": Z, "re": R, "im": R}, ...]}
nlohmann::json to_json(const LineElement &elem);
LineElement line_from_json(const nlohmann::json &j);

// {"nu": R, "alpha": R, "coeffs": [{"m": Z, "n": Z, "re": R, "im": R}, ...]}
nlohmann::json to_json(const LandauElement &elem);
LandauElement landau_from_json(const nlohmann::json &j);

/// Reads and parses a JSON document, raising InputError on failure.
nlohmann::json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const nlohmann::json &j);

} // namespace qptheta

#endif

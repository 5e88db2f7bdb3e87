#include "qptheta/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

namespace qptheta
{

namespace
{

double parse_real(const std::string &text, const std::string &whole)
{
    if (text.empty()) {
        throw InputError("malformed complex literal '" + whole + "'");
    }
    // strtod would accept locale-specific forms; from_chars does not.
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (*first == '+') {
        ++first;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw InputError("malformed complex literal '" + whole + "'");
    }
    return value;
}

double imag_coefficient(const std::string &text, const std::string &whole)
{
    if (text.empty() || text == "+") {
        return 1.0;
    }
    if (text == "-") {
        return -1.0;
    }
    return parse_real(text, whole);
}

const nlohmann::json &field(const nlohmann::json &j, const char *key, const char *what)
{
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string(what) + ": missing field '" + key + "'");
    }
    return j.at(key);
}

double real_field(const nlohmann::json &j, const char *key, const char *what)
{
    const auto &v = field(j, key, what);
    if (!v.is_number()) {
        throw InputError(std::string(what) + ": field '" + key + "' must be a number");
    }
    return v.get<double>();
}

int int_field(const nlohmann::json &j, const char *key, const char *what)
{
    const auto &v = field(j, key, what);
    if (!v.is_number_integer()) {
        throw InputError(std::string(what) + ": field '" + key + "' must be an integer");
    }
    return v.get<int>();
}

const nlohmann::json &coeff_array(const nlohmann::json &j, const char *what)
{
    const auto &arr = field(j, "coeffs", what);
    if (!arr.is_array()) {
        throw InputError(std::string(what) + ": 'coeffs' must be an array");
    }
    return arr;
}

Complex coeff_value(const nlohmann::json &entry, const char *what)
{
    return {real_field(entry, "re", what), real_field(entry, "im", what)};
}

template <typename Build>
auto wrap_domain(Build &&build, const char *what)
{
    try {
        return build();
    } catch (const DomainError &e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

} // namespace

Complex parse_complex(const std::string &text)
{
    if (text.empty()) {
        throw InputError("empty complex literal");
    }
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            throw InputError("complex literal must not contain spaces: '" + text + "'");
        }
    }
    if (text.back() != 'i') {
        return {parse_real(text, text), 0.0};
    }
    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        return {0.0, imag_coefficient(body, text)};
    }
    return {parse_real(body.substr(0, split), text), imag_coefficient(body.substr(split), text)};
}

nlohmann::json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const nlohmann::json &j) { return coeff_value(j, "complex"); }

nlohmann::json to_json(const FockElement &elem)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &[n, a] : elem.coeffs()) {
        coeffs.push_back({{"n", n}, {"re", a.real()}, {"im", a.imag()}});
    }
    return {{"nu", elem.params().nu()}, {"alpha", elem.params().alpha()}, {"coeffs", coeffs}};
}

FockElement fock_from_json(const nlohmann::json &j)
{
    constexpr const char *what = "fock element";
    const double nu = real_field(j, "nu", what);
    const double alpha = real_field(j, "alpha", what);
    FockElement::Coefficients coeffs;
    for (const auto &entry : coeff_array(j, what)) {
        const int n = int_field(entry, "n", what);
        if (!coeffs.emplace(n, coeff_value(entry, what)).second) {
            throw InputError("fock element: duplicate index n = " + std::to_string(n));
        }
    }
    return wrap_domain([&] { return FockElement(SpaceParams(nu, alpha), std::move(coeffs)); }, what);
}

nlohmann::json to_json(const LineElement &elem)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &[n, b] : elem.coeffs()) {
        coeffs.push_back({{"n", n}, {"re", b.real()}, {"im", b.imag()}});
    }
    return {{"alpha", elem.alpha()}, {"coeffs", coeffs}};
}

LineElement line_from_json(const nlohmann::json &j)
{
    constexpr const char *what = "line element";
    const double alpha = real_field(j, "alpha", what);
    LineElement::Coefficients coeffs;
    for (const auto &entry : coeff_array(j, what)) {
        const int n = int_field(entry, "n", what);
        if (!coeffs.emplace(n, coeff_value(entry, what)).second) {
            throw InputError("line element: duplicate index n = " + std::to_string(n));
        }
    }
    return wrap_domain([&] { return LineElement(alpha, std::move(coeffs)); }, what);
}

nlohmann::json to_json(const LandauElement &elem)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &[idx, a] : elem.coeffs()) {
        coeffs.push_back({{"m", idx.m}, {"n", idx.n}, {"re", a.real()}, {"im", a.imag()}});
    }
    return {{"nu", elem.params().nu()}, {"alpha", elem.params().alpha()}, {"coeffs", coeffs}};
}

LandauElement landau_from_json(const nlohmann::json &j)
{
    constexpr const char *what = "landau element";
    const double nu = real_field(j, "nu", what);
    const double alpha = real_field(j, "alpha", what);
    LandauElement::Coefficients coeffs;
    for (const auto &entry : coeff_array(j, what)) {
        const LevelIndex idx{int_field(entry, "m", what), int_field(entry, "n", what)};
        if (!coeffs.emplace(idx, coeff_value(entry, what)).second) {
            throw InputError("landau element: duplicate index (" + std::to_string(idx.m) + ", " +
                             std::to_string(idx.n) + ")");
        }
    }
    return wrap_domain([&] { return LandauElement(SpaceParams(nu, alpha), std::move(coeffs)); }, what);
}

nlohmann::json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_json_file(const std::string &path, const nlohmann::json &j)
{
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << j.dump(2) << '\n';
}

} // namespace qptheta

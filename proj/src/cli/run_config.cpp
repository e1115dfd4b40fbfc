#include "padicsum/run_config.hpp"

#include <cstdlib>
#include <stdexcept>

namespace padicsum {

OutputFormat parse_format(std::string_view text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "text") return OutputFormat::text;
    if (text == "bfile") return OutputFormat::bfile;
    throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

const char* to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::text: return "text";
        case OutputFormat::bfile: return "bfile";
    }
    return "?";
}

std::vector<Sign> RunConfig::signs() const {
    if (eps) {
        return {*eps};
    }
    return {Sign::plus, Sign::minus};
}

BigRational parse_rational_literal(std::string_view text) {
    for (char c : text) {
        if (c == '.' || c == 'e' || c == 'E') {
            throw std::invalid_argument("'" + std::string(text) +
                                        "' is not an exact rational; write it as p/q");
        }
    }
    return BigRational::parse(text);
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(',', start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::vector<Prime> parse_primes(std::string_view text) {
    std::vector<Prime> primes;
    for (auto part : split_commas(text)) {
        BigInt v = BigInt::parse(part);
        if (v.sign() <= 0 || !v.fits_long()) {
            throw std::invalid_argument("'" + std::string(part) + "' is not a prime");
        }
        primes.emplace_back(static_cast<std::uint64_t>(v.to_long()));
    }
    return primes;
}

std::vector<BigRational> parse_rational_list(std::string_view text) {
    std::vector<BigRational> out;
    for (auto part : split_commas(text)) {
        out.push_back(parse_rational_literal(part));
    }
    return out;
}

Sign parse_sign(std::string_view text) {
    if (text == "1" || text == "+1" || text == "+") return Sign::plus;
    if (text == "-1" || text == "-") return Sign::minus;
    throw std::invalid_argument("eps must be +1 or -1, got '" + std::string(text) + "'");
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) {
        return env;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "padicsum";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "padicsum";
    }
    return ".padicsum-cache";
}

}  // namespace padicsum

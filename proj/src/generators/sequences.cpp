#include "padicsum/sequences.hpp"

#include <stdexcept>

#include "padicsum/a_table.hpp"
#include "padicsum/uv.hpp"

namespace padicsum {

namespace {

int parse_unit(std::string_view text, std::string_view whole) {
    if (text == "1" || text == "+1") return 1;
    if (text == "-1") return -1;
    throw std::invalid_argument("sequence id '" + std::string(whole) + "': x must be 1 or -1");
}

}  // namespace

SequenceId SequenceId::parse(std::string_view text) {
    if (text.size() < 3 || (text[0] != 'A' && text[0] != 'U') ||
        (text[1] != '+' && text[1] != '-')) {
        throw std::invalid_argument("unknown sequence id '" + std::string(text) + "'");
    }
    SequenceId id;
    id.family = text[0] == 'A' ? Family::A : Family::U;
    id.eps = text[1] == '+' ? Sign::plus : Sign::minus;
    auto rest = text.substr(2);
    if (id.family == Family::A) {
        auto comma = rest.find(',');
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("sequence id '" + std::string(text) + "' needs n,x");
        }
        auto n_text = rest.substr(0, comma);
        if (n_text != "0" && n_text != "1") {
            throw std::invalid_argument("sequence id '" + std::string(text) + "': n must be 0 or 1");
        }
        id.n = n_text == "0" ? 0 : 1;
        id.x = parse_unit(rest.substr(comma + 1), text);
    } else {
        id.x = parse_unit(rest, text);
    }
    return id;
}

std::string SequenceId::to_string() const {
    std::string out = family == Family::A ? "A" : "U";
    out += eps == Sign::plus ? "+" : "-";
    if (family == Family::A) {
        out += std::to_string(n) + ",";
    }
    return out + std::to_string(x);
}

IndexedSequence sequence_slice(const SequenceId& id, std::size_t kmax) {
    IndexedSequence out;
    out.first_index = id.first_index();
    if (id.family == SequenceId::Family::A) {
        ATable table = generate_a_table(kmax, id.eps);
        for (const auto& a : table.entries) {
            out.values.push_back(a.eval(id.n, id.x).numerator());
        }
        return out;
    }
    if (kmax == 0) {
        return out;
    }
    ATable table = generate_a_table(kmax - 1, id.eps);
    UVPolyTable uv = derive_uv(table);
    for (std::size_t k = 1; k <= kmax; ++k) {
        out.values.push_back(uv.u_poly(k)(id.x).numerator());
    }
    return out;
}

}  // namespace padicsum

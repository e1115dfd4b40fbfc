#include "padicsum/bfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace padicsum {

BFile::BFile(std::vector<BFileEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].index <= entries_[i - 1].index) {
            throw std::invalid_argument("b-file indices must strictly increase");
        }
    }
}

BFile BFile::from_sequence(const IndexedSequence& seq) {
    std::vector<BFileEntry> entries;
    entries.reserve(seq.values.size());
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        entries.push_back({seq.first_index + static_cast<std::int64_t>(i), seq.values[i]});
    }
    return BFile(std::move(entries));
}

BFile BFile::parse(std::istream& in) {
    std::vector<BFileEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string idx;
        std::string val;
        std::string extra;
        if (!(fields >> idx >> val) || (fields >> extra)) {
            throw BFileError(lineno, "expected 'index value', got '" + line + "'");
        }
        BFileEntry e{0, BigInt(0)};
        try {
            BigInt i = BigInt::parse(idx);
            if (!i.fits_long()) {
                throw std::invalid_argument("index out of range");
            }
            e.index = i.to_long();
            e.value = BigInt::parse(val);
        } catch (const std::invalid_argument& ex) {
            throw BFileError(lineno, ex.what());
        }
        if (!entries.empty() && e.index <= entries.back().index) {
            throw BFileError(lineno, "index " + std::to_string(e.index) + " does not increase");
        }
        entries.push_back(std::move(e));
    }
    return BFile(std::move(entries));
}

BFile BFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open b-file '" + path + "'");
    }
    return parse(in);
}

void BFile::write(std::ostream& os) const {
    for (const auto& e : entries_) {
        os << e.index << ' ' << e.value << '\n';
    }
}

std::optional<BigInt> BFile::at(std::int64_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const BFileEntry& e, std::int64_t i) { return e.index < i; });
    if (it == entries_.end() || it->index != index) {
        return std::nullopt;
    }
    return it->value;
}

CompareReport compare_up_to_sign(const IndexedSequence& local, const BFile& reference,
                                 std::int64_t offset) {
    CompareReport rep;
    for (std::size_t i = 0; i < local.values.size(); ++i) {
        std::int64_t index = local.first_index + static_cast<std::int64_t>(i);
        auto ref = reference.at(index + offset);
        if (!ref) {
            continue;
        }
        ++rep.compared;
        if (local.values[i].abs() != ref->abs()) {
            rep.first_divergence = index;
            break;
        }
    }
    return rep;
}

}  // namespace padicsum

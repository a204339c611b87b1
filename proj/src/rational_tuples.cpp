#include "dioph/rational_tuples.hpp"

#include <algorithm>
#include <sstream>

namespace dioph {

namespace {

// Row 10 is kept exactly as published even though e = 665/152 fails the
// square test; see tests/test_rational_tuples.cpp.
constexpr std::string_view kSextupleTable = R"(
1: 11/192 35/192 155/27 512/27 1235/48 180873/16 | a b c d f | a b d e | c d e f
2: 17/448 265/448 2145/448 252 23460/7 2352/7921 | a b d e f | b c d e
3: 9/44 91/132 60/11 44/3 1265/12 4420/3993 | a b d e f | a b c d | a c d e | a b c f
4: 3/80 55/16 28/5 1683/80 1680 2220/6889 | a c d e f | a b c d | b c d e | a b c
5: 47/60 287/240 225/64 1463/60 512/15 225/1156 | a b d e f | a b c d | a d e
6: 27/1856 2065/5568 116/3 23693/192 12880/87 21420/229709 | a c d e f | a b d e
7: 21/352 237/352 280/33 1573/96 4680/11 398090/236883 | a b c e f | a b c d | b c d e
8: 57/2960 52/185 6205/592 1221/80 8580/37 33300/841 | a b d e f | a b c d | b c d e
9: 609/3520 455/2112 99/20 320/33 60137/960 11874240/43080851 | b c d e f | a b c d | a c d e
10: 5/36 5/4 32/9 189/4 665/152 3213/676 | a b c d e | a b c d f | a b d f | c d e f | a b c
11: 32/91 60/91 42/13 12012 1878240/1324801 15343900/12215287 | a b c d e | a b c d f | a b c
12: 9/140 47/105 608/105 1225/12 347072/176505 121275/6724 | a b c d e | a b c d f | a c e f | b d e f
)";

std::vector<std::string> words(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

}  // namespace

RationalTuple::RationalTuple(std::vector<Rat> elems, std::optional<std::string> label)
    : tuple_(std::move(elems)), label_(std::move(label)) {
    const auto& e = tuple_.elems();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].sign() <= 0) {
            throw DomainError("RationalTuple: element " + to_string(e[i]) + " is not positive");
        }
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (e[i] == e[j]) {
                throw DomainError("RationalTuple: repeated element " + to_string(e[i]));
            }
        }
    }
}

std::vector<IndexSubset> checkable_annotations(const SextupleRecord& rec) {
    std::vector<IndexSubset> out;
    std::copy_if(rec.annotations.begin(), rec.annotations.end(), std::back_inserter(out),
                 [](const IndexSubset& s) { return s.size() == 3 || s.size() == 4; });
    return out;
}

std::vector<IndexSubset> quintuple_annotations(const SextupleRecord& rec) {
    std::vector<IndexSubset> out;
    std::copy_if(rec.annotations.begin(), rec.annotations.end(), std::back_inserter(out),
                 [](const IndexSubset& s) { return s.size() == 5; });
    return out;
}

DiophantineCheck verify_rational_diophantine(const RationalTuple& t) { return is_diophantine(t.tuple()); }

bool subset_is_regular(const std::vector<Rat>& e, const IndexSubset& s) {
    if (s.size() == 3) {
        return eval_P(e.at(s[0]), e.at(s[1]), e.at(s[2]), Rat(0)).is_zero();
    }
    if (s.size() == 4) {
        return eval_P(e.at(s[0]), e.at(s[1]), e.at(s[2]), e.at(s[3])).is_zero();
    }
    throw DomainError("subset_is_regular: subset must have 3 or 4 indices");
}

std::vector<IndexSubset> regular_subtuples(const RationalTuple& t) {
    const auto& e = t.elems();
    const std::size_t n = e.size();
    std::vector<IndexSubset> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (subset_is_regular(e, {i, j, k})) out.push_back({i, j, k});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    if (subset_is_regular(e, {i, j, k, l})) out.push_back({i, j, k, l});
    return out;
}

std::vector<SextupleRecord> parse_sextuple_table(std::string_view text) {
    std::vector<SextupleRecord> out;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto where = " (line " + std::to_string(line_no) + ")";

        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw DatasetError("sextuple table: missing label" + where);
        }
        SextupleRecord rec;
        auto label = words(std::string_view(line).substr(0, colon));
        if (label.size() != 1) {
            throw DatasetError("sextuple table: bad label" + where);
        }
        rec.label = label.front();

        std::vector<std::string_view> fields;
        std::string_view rest = std::string_view(line).substr(colon + 1);
        for (;;) {
            const auto bar = rest.find('|');
            fields.push_back(rest.substr(0, bar));
            if (bar == std::string_view::npos) break;
            rest.remove_prefix(bar + 1);
        }

        for (const auto& w : words(fields.front())) {
            try {
                rec.elems.push_back(parse_rat(w));
            } catch (const std::exception& e) {
                throw DatasetError(std::string("sextuple table: ") + e.what() + where);
            }
        }
        if (rec.elems.size() != 6) {
            throw DatasetError("sextuple table: expected 6 elements" + where);
        }
        for (std::size_t f = 1; f < fields.size(); ++f) {
            IndexSubset subset;
            for (const auto& w : words(fields[f])) {
                if (w.size() != 1 || w[0] < 'a' || w[0] > 'f') {
                    throw DatasetError("sextuple table: bad annotation letter '" + w + "'" + where);
                }
                subset.push_back(static_cast<std::size_t>(w[0] - 'a'));
            }
            if (subset.size() < 3 || subset.size() > 5 || !std::is_sorted(subset.begin(), subset.end()) ||
                std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
                throw DatasetError("sextuple table: annotations need 3 to 5 distinct ascending letters" +
                                   where);
            }
            rec.annotations.push_back(std::move(subset));
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<SextupleRecord> load_sextuple_dataset() {
    auto records = parse_sextuple_table(kSextupleTable);
    if (records.size() != 12) {
        throw DatasetError("sextuple table: expected 12 records, found " + std::to_string(records.size()));
    }
    return records;
}

std::string subset_letters(const IndexSubset& subset) {
    std::string out;
    for (auto i : subset) {
        if (!out.empty()) out += ' ';
        out += static_cast<char>('a' + i);
    }
    return out;
}

}  // namespace dioph

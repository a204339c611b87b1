#pragma once

// Rational Diophantine m-tuples and the embedded table of twelve rational
// sextuples with their regular sub-tuple annotations.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/quad_core.hpp"

namespace dioph {

// 2 to 6 positive, pairwise distinct rationals.
class RationalTuple {
public:
    explicit RationalTuple(std::vector<Rat> elems, std::optional<std::string> label = std::nullopt);

    const std::vector<Rat>& elems() const { return tuple_.elems(); }
    const Tuple& tuple() const { return tuple_; }
    const std::optional<std::string>& label() const { return label_; }
    std::size_t size() const { return tuple_.size(); }

private:
    Tuple tuple_;
    std::optional<std::string> label_;
};

using IndexSubset = std::vector<std::size_t>;

struct SextupleRecord {
    std::string label;
    std::vector<Rat> elems;                 // exactly 6
    std::vector<IndexSubset> annotations;   // sizes 3, 4 or 5, indices ascending
};

// Annotations of size 3 or 4 (the ones that can be checked with P).
std::vector<IndexSubset> checkable_annotations(const SextupleRecord& rec);
// Size-5 annotations, carried but not validated.
std::vector<IndexSubset> quintuple_annotations(const SextupleRecord& rec);

// Every pairwise product + 1 must be a rational square.
DiophantineCheck verify_rational_diophantine(const RationalTuple& t);

// All 3-subsets with P(x, y, z, 0) = 0, then all 4-subsets with P = 0, each
// as ascending indices in lexicographic order. Meant for tuples already
// known to be Diophantine; evaluation itself does not require it.
std::vector<IndexSubset> regular_subtuples(const RationalTuple& t);

// True when the subset (size 3 or 4) satisfies P = 0.
bool subset_is_regular(const std::vector<Rat>& elems, const IndexSubset& subset);

struct DatasetError : ParseError {
    using ParseError::ParseError;
};

// One record per non-empty line:
//   <label>: <six rationals> [| <letters a-f> ...]...
// Throws DatasetError on malformed input.
std::vector<SextupleRecord> parse_sextuple_table(std::string_view text);

// The twelve rational sextuples, transcribed verbatim.
std::vector<SextupleRecord> load_sextuple_dataset();

std::string subset_letters(const IndexSubset& subset);

}  // namespace dioph

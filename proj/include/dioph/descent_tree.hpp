#pragma once

/**
 * Descent certificates and the two solution trees of P = 0.
 *
 * Every nonnegative integer solution reduces, by repeatedly replacing its
 * largest element with the other root, to one of two terminals:
 * (0,0,0,-2) for the even tree and (0,0,1,-1) for the odd tree. Running the
 * same moves upward enumerates the trees.
 *
 * Enumeration bounds are always on the largest element, never on depth.
 */

#include <cstddef>
#include <string_view>
#include <vector>

#include "dioph/errors.hpp"
#include "dioph/quad_core.hpp"

namespace dioph {

enum class Parity { Even, Odd };

std::string_view to_string(Parity p);

// Terminals of the descent, written with the negative element last.
Quad base_even();
Quad base_odd();
Quad base_of(Parity p);

// Raised when an operation needs an irregular tuple and was given a regular one.
struct RegularInputError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct DescentStep {
    Quad tuple;          // sorted, before the swap
    std::size_t index;   // slot that was swapped (always the largest)
    Int new_value;       // other root written into that slot
};

struct DescentCertificate {
    Quad start;
    std::vector<DescentStep> steps;
    Quad terminal;
    Parity parity = Parity::Even;
};

// Throws PreconditionError if q does not solve P = 0 or has more than one
// negative element.
DescentCertificate descend(const Quad& q);

// One descent move on a sorted nonnegative solution: the tuple that results
// from replacing the largest element, re-sorted unless the new value is
// negative (in which case it stays in the last slot, as in the terminals).
Quad descent_parent(const Quad& sorted);

// Re-checks every link of a certificate independently of how it was built.
bool verify_certificate(const DescentCertificate& cert);

// For sorted nonnegative solutions: d * d' == (c - a - b)^2 - 4(ab + 1) and
// d >= c implies d' < c. False when the preconditions do not hold.
bool descent_bound_check(const Int& a, const Int& b, const Int& c, const Int& d);

struct TreeNode {
    Quad tuple;         // sorted ascending, nonnegative
    std::size_t depth;  // swaps from the terminal; equals descend(tuple).steps.size()

    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct EnumerateOptions {
    // 0 picks DIOPH_WORKERS from the environment, else the hardware count.
    unsigned workers = 0;
};

unsigned resolve_workers(unsigned requested);

// Every canonical nonnegative solution in the chosen tree with all elements
// <= max_element, sorted by tuple. Includes nodes with zeros.
std::vector<TreeNode> enumerate_tree(const Int& max_element, Parity parity,
                                     const EnumerateOptions& opts = {});

// Tree parity read off the elements: the even tree holds only even elements,
// and root swaps preserve each element's parity.
Parity parity_of(const Quad& q);

// Positive regular quadruples (both trees) with largest element <= bound,
// sorted. Prunes everything that cannot lead to an all-positive node, so it
// scales to bounds where enumerate_tree cannot.
std::vector<Quad> enumerate_quadruples(const Int& bound, const EnumerateOptions& opts = {});

// (a, b, c) irregular with a < b < c  ->  sorted quadruple with d_lower inserted.
Quad irregular_triple_to_regular_quad(const Int& a, const Int& b, const Int& c);

struct SharedMaxPair {
    Quad first;   // lexicographically smaller
    Quad second;
};

// Pairs of distinct positive regular quadruples with the same largest
// element, ordered by (largest element, first, second).
std::vector<SharedMaxPair> find_shared_max(const Int& bound, const EnumerateOptions& opts = {});

// q1 = (a,b,c',d), q2 = (a,b',c,d), q3 = (a',b,c,d), all regular, with
// d > a,b,c,a',b',c' > 0. Tuples are stored sorted.
struct ThreeSystem {
    Quad q1;
    Quad q2;
    Quad q3;
    Quad shared;                 // (a, b, c, d)
    std::array<Int, 3> primed;   // (a', b', c')
};

// Searches positive regular quadruples up to bound; any hit would be an
// irregular Diophantine quadruple and is checked as such before returning.
std::vector<ThreeSystem> find_three_system(const Int& bound, const EnumerateOptions& opts = {});

// Builds the three regular quadruples from an irregular quadruple
// 0 < a < b < c < d. Throws RegularInputError for regular input and
// PreconditionError when the input is not a Diophantine quadruple.
ThreeSystem system_from_irregular(const Int& a, const Int& b, const Int& c, const Int& d);

}  // namespace dioph

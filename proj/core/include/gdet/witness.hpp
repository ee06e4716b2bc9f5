#pragma once

#include <stdexcept>

#include "gdet/group_determinant.hpp"
#include "gdet/sets.hpp"

namespace gdet {

// Explicit coefficient vector certifying that `target` is an achievable
// determinant value. Witnesses are only returned after the 16x16 matrix
// route has confirmed the value; verified is always true on return and an
// unverifiable witness raises InternalError instead.
struct Witness {
    Int target;
    CoeffVec16 coeffs;
    Family family = Family::NonMember;
    bool verified = false;
};

// A construction invariant failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// synthesize() was asked for a value outside the achievable set.
struct NonMemberError : std::runtime_error {
    Classification classification;
    explicit NonMemberError(Classification c)
        : std::runtime_error(c.reason), classification(std::move(c)) {}
};

// The closed coefficient families below evaluate to the stated values for
// every integer m, n. Tuples are written in index order 0..15.

// (m+1, m, ..., m)  ->  16m + 1
CoeffVec16 witness_odd(const Int& m);

// (m+1, m+1, m+2, m, m, ..., m)  ->  2^16 (4m+1)
CoeffVec16 witness_e16_4m1(const Int& m);

// 16-tuple in m, n  ->  2^16 (4m+1)(8n+3)
CoeffVec16 witness_e16_4m1_8n3(const Int& m, const Int& n);

// -> 2^18 (2m+1)
CoeffVec16 witness_e18_odd(const Int& m);

// -> 2^18 (2m)
CoeffVec16 witness_e18_even(const Int& m);

// For p = a^2+b^2 = 1 (mod 8) prime with a+b = +-3 (mod 8):
// derives k, l from 2p = (8k-3)^2 + (8l+3)^2 and emits a tuple with
// determinant 2^16 p (4m-1). Throws std::domain_error if p fails the
// precondition, InternalError if the parity invariant of the derivation
// breaks (which would mean a two_squares normalization bug).
CoeffVec16 witness_pprime(const Int& p, const Int& m);

// For p = 5 (mod 8) prime: derives k, l from 2p = (8k+3)^2 + (8l+1)^2
// and emits a tuple with determinant 2^17 p (2m+1).
CoeffVec16 witness_p5(const Int& p, const Int& m);

// Classify v and dispatch to the matching construction; the result is
// checked against the matrix oracle before it is returned. Throws
// NonMemberError (carrying the classification) for unachievable values.
Witness synthesize(const Int& v);

}  // namespace gdet

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbifold/isomorphism.hpp"
#include "orbifold/structure_table.hpp"
#include "orbifold/weights.hpp"

namespace orbifold {

/// Outcome of one identity checked over an enumerated input set.
struct CheckRecord {
    std::string name;
    std::vector<std::int64_t> weights;
    std::int64_t inputs = 0; // tuples examined
    bool passed = true;
    std::string counterexample; // first failing input with both sides; empty when passed
};

class VerificationReport {
public:
    void add(CheckRecord r) { records_.push_back(std::move(r)); }
    void merge(VerificationReport other);

    bool passed() const;
    std::int64_t total_inputs() const;
    const std::vector<CheckRecord>& records() const { return records_; }

private:
    std::vector<CheckRecord> records_;
};

/// Both rings for one weight vector, their structure constants, and the
/// basis bijection between them. The tables are plain data so callers (and
/// fault-injection builds) can inspect or mutate them before verifying.
struct RingBundle {
    XiMap xi;
    FrobeniusTable chow_table;
    FrobeniusTable model_table;

    static RingBundle make(const Weights& w);
};

/// Exhaustively checks the fractional-part, age, enumeration and k_min/k_max
/// identities over every root-of-unity argument reachable at this weight
/// vector (sector arguments, the full |w|-th root group, and their pairwise
/// products).
VerificationReport verify_combinatorics(const Weights& w);

/// Degree bounds, subadditivity, dual pairing and Poincare symmetry of the
/// model grading, over all exponents and exponent pairs.
VerificationReport verify_degree_lemmas(const ModelRing& ring);

/// Graded Frobenius algebra axioms for one structure table: unit,
/// commutativity, associativity over all triples, degree additivity on
/// nonzero products, pairing compatibility over all triples, and perfectness
/// of the Gram matrix.
VerificationReport verify_frobenius(const FrobeniusTable& table);

/// The four properties making the basis bijection an isomorphism of graded
/// Frobenius algebras: bijectivity, degree preservation, multiplicativity
/// and pairing compatibility, plus unit and dual-pair bookkeeping.
VerificationReport verify_isomorphism(const RingBundle& bundle);

/// Every check above for one weight vector, on a caller-supplied bundle.
VerificationReport verify_bundle(const RingBundle& bundle);

/// Every check above for one weight vector.
VerificationReport verify_all(const Weights& w);

} // namespace orbifold

#pragma once

// Exhaustive desk-scale verification sweeps shared by the CLI `check`
// subcommand, the unit tests and the acceptance suite.  Every sweep either
// passes or reports the first witness in a deterministic scan order.

#include "rthopf/enumeration.hpp"
#include "rthopf/hopf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rthopf {

struct SweepReport {
    bool pass = true;
    std::string failed_check; // empty when pass
    std::string witness;      // rendered witness when not
};

// coassociativity, both counit laws, Delta(xy) = Delta(x) Delta(y) and both
// antipode convolution identities over all forests of weight <= wmax
SweepReport check_hopf_axioms(int wmax);

// cut-based vs root-grafting coproduct on every tree of weight <= wmax
SweepReport check_coproduct_oracles(int wmax);

// <w w', h> = sum over Delta(h) of <w, h_1> <w', h_2> for all word pairs
// and basis forests of weight <= wmax
SweepReport check_pairing_recursion(int wmax);

// grading sweeps: product adds degrees, coproduct legs split them, the
// antipode preserves them; graft maps H_(a) x H_(b) into H_(a+b)
SweepReport check_grading(int wmax);

// randomized canonical-form properties: permuting children never changes
// the class, parse round-trips, generated trees are canonical
SweepReport check_tree_canonicalization(int weight, int samples, std::uint64_t seed);

struct CountRow {
    int n = 0;
    BigCount computed;
    BigCount oracle;
    bool match = true;
};

// recurrence vs brute-force oracle; inject_fault perturbs the last row to
// exercise the mismatch path
std::vector<CountRow> verify_counts(int nmax, std::optional<int> r, BranchMode mode,
                                    bool inject_fault = false);

} // namespace rthopf

#ifndef SEPLAT_SWEEP_HPP
#define SEPLAT_SWEEP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "seplat/lattice.hpp"
#include "seplat/separation.hpp"

namespace seplat::lattice {

struct SweepRow {
  Region region;
  ShieldVerdict shield;
  bool graph_shielder_off = false;
  SeparationVerdict verdict;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::size_t shielder_off_count = 0;
  // Geometric shielder-off regions whose vertex set does not separate.
  std::vector<std::size_t> counterexamples;
  // Geometric and graph-level shielder-off flags disagree.
  std::vector<std::size_t> divergences;
};

// Every candidate from enumerate_shielder_off, with its separation verdict
// on g (d-separation for diamond graphs, m-separation for box graphs).
SweepReport prop1_sweep(const MixedGraph& g, const Cell& a, const Cell& b, const Window& w,
                        L3Variant variant, std::size_t max_cells,
                        std::size_t cap = kDefaultCandidateCap);

// Header plus one row per candidate:
// candidate_set;l1;l2;l3;shielder_off;separated;witness
std::string sweep_csv(const MixedGraph& g, const SweepReport& report);

}  // namespace seplat::lattice

#endif  // SEPLAT_SWEEP_HPP

#include "seplat/sweep.hpp"

#include <sstream>

namespace seplat::lattice {

SweepReport prop1_sweep(const MixedGraph& g, const Cell& a, const Cell& b, const Window& w,
                        L3Variant variant, std::size_t max_cells, std::size_t cap) {
  const VertexIndex va = g.index_of(a.label());
  const VertexIndex vb = g.index_of(b.label());
  SweepReport report;
  enumerate_shielder_off(
      a, b, w, variant, max_cells,
      [&](const Region& region, const ShieldVerdict& shield) {
        const VertexSet cond = region_to_vertexset(g, region);
        SweepRow row{region, shield, is_graph_shielder_off_set(g, va, vb, cond),
                     is_separated(g, {va, vb, cond})};
        const std::size_t index = report.rows.size();
        if (shield.shielder_off) {
          ++report.shielder_off_count;
          if (!row.verdict.separated) report.counterexamples.push_back(index);
        }
        if (shield.shielder_off != row.graph_shielder_off) report.divergences.push_back(index);
        report.rows.push_back(std::move(row));
      },
      cap);
  return report;
}

std::string sweep_csv(const MixedGraph& g, const SweepReport& report) {
  std::ostringstream out;
  out << "candidate_set;l1;l2;l3;shielder_off;separated;witness\n";
  for (const SweepRow& row : report.rows) {
    out << row.region.literal() << ';' << row.shield.l1 << ';' << row.shield.l2 << ';'
        << row.shield.l3 << ';' << row.shield.shielder_off << ';' << row.verdict.separated << ';';
    if (row.verdict.witness) out << format_path(g, *row.verdict.witness);
    out << '\n';
  }
  return out.str();
}

}  // namespace seplat::lattice

// csv.hpp: Number formatting and the CSV exports. Every writer puts the
// given comment lines first ("# " prefixed), then the header row.

#pragma once

#include <string>
#include <vector>

namespace tqr {

struct SpectrumResult;
struct GTrace;
struct ExpansionBlock;
struct FlatLine;
struct ExceptionalCandidate;
struct ExceptionalState;
struct SweepRow;

/// Shortest round-trip-safe text for a double: %.17g, "nan", "inf", "-inf".
std::string format_number(double v);

using Comments = std::vector<std::string>;

/// E,parity,method,residual (plus label,status when `with_status`).
std::string spectrum_csv(const SpectrumResult& spectrum, const Comments& comments = {}, bool with_status = false);

/// E,G_plus,G_minus on the union of both grids; baselines appear as rows with
/// empty G cells and are listed in the comments.
std::string trace_csv(const GTrace& plus, const GTrace& minus, const Comments& comments = {});

/// n,c1,c2,c3,c4 (raw coefficients).
std::string coefficients_csv(const ExpansionBlock& block, const Comments& comments = {});

/// N,parity,energy,condition_value,g_independent,manifold_label
std::string catalog_csv(const std::vector<FlatLine>& lines, const Comments& comments = {});
std::string catalog_csv(const std::vector<ExceptionalCandidate>& candidates, const Comments& comments = {});

/// n,s1s2,amplitude blocks, one "# candidate ..." line before each state.
std::string states_csv(const std::vector<ExceptionalState>& states, const Comments& comments = {});

/// <variable>,E,parity,method,status
std::string sweep_csv(const std::vector<SweepRow>& rows, const std::string& variable, const Comments& comments = {});

}  // namespace tqr

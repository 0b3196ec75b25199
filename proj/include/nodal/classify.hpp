#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nodal/construct.hpp"

namespace nodal {

/// Ordered by severity; combining verdicts takes the maximum.
enum class Verdict { Finite, Tame, NonWildUnresolved, Wild };

std::string verdict_name(Verdict v);
Verdict combine(Verdict a, Verdict b);

struct RepType {
  Verdict verdict = Verdict::Finite;
  std::vector<std::string> trace;
};

enum class ExceptionalCase { One, Two };

/// Parameters of an (n, m, l)-exceptional configuration. `i` and `j` name
/// the exceptional pair in the labeling that matched: the β tail hangs off
/// i and the γ tail off j.
struct ExceptionalParams {
  std::size_t n = 1;
  std::size_t m = 0;
  std::size_t l = 0;
  ExceptionalCase shape = ExceptionalCase::One;
  bool super_exceptional = false;
  std::string i;
  std::string j;
  /// Arrow ids α1..αn from i to j.
  std::vector<std::string> cycle_arrows;
};

/// Result of a shape detector: params when matched, otherwise the reason it
/// did not match (and warnings, e.g. for cycle-shaped bases).
struct ExceptionalMatch {
  std::optional<ExceptionalParams> params;
  std::string reason;
  std::vector<std::string> warnings;

  explicit operator bool() const { return params.has_value(); }
};

struct GentleReport {
  bool gentle = true;
  std::vector<std::string> diagnostics;

  explicit operator bool() const { return gentle; }
};

/// True iff some ordering (i, j) of the pair has no arrow ending at i and
/// none starting at j in the base. Throws UnknownPair when the pair is not
/// one of d's glue pairs.
bool is_inessential(const NodalDatum& d, const GluePair& pair);

/// d without its inessential glue pairs.
NodalDatum strip_inessential(const NodalDatum& d);

/// Gabriel's theorem per component, worst component wins. Throws
/// CyclicQuiver.
RepType gabriel_type(const Quiver& q);

/// Checks the four gentle axioms; all relations must be zero relations of
/// length two.
GentleReport is_gentle_presentation(const Presentation& p);

/// After stripping inessential pairs, every glued or blown vertex has at most
/// one arrow in and one arrow out in the base. Throws NotTypeA.
bool is_quasi_gentle(const NodalDatum& d);

ExceptionalMatch detect_exceptional(const NodalDatum& d);
ExceptionalMatch detect_super_exceptional(const NodalDatum& d);

RepType exceptional_type(const ExceptionalParams& p);

/// Representation type of the nodal algebra of d, decided per connected
/// component of the glued quiver. Throws InvalidDatum and NotTypeA.
RepType classify(const NodalDatum& d);

/// x² + 2y1² + y2² + 2y1y2 − 3xy1 − 2xy2.
std::int64_t tits_witness(std::int64_t x, std::int64_t y1, std::int64_t y2);

/// Throws NotTypeA unless every base component is a line or a cycle.
void require_type_a(const Quiver& base);

/// The sub-data living on the connected components of the glued quiver, in
/// order of their smallest base vertex.
std::vector<NodalDatum> split_components(const NodalDatum& d);

}  // namespace nodal

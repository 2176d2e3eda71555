#pragma once

#include "ffree/check.hpp"
#include "ffree/families.hpp"

namespace ffree {

enum class AuditStatus { Ok, WrongSize, NotFFree };

// Necessary conditions every maximum-size admissible digraph satisfies,
// evaluated on the orientation with the larger max outdegree.
struct AuditReport {
  AuditStatus status = AuditStatus::Ok;
  bool reversed = false;  // conditions were evaluated on the reverse
  int delta_plus = 0;
  int alpha_value = 0;
  bool delta_plus_ok = false;  // even n: {n/2, n/2+1}; odd n: (n+1)/2
  bool alpha_ok = false;       // alpha <= 1
  // No vertex receives two arcs from inside one out-neighbourhood.
  bool fanin_ok = false;
  std::string details;
};

AuditReport audit(const Digraph& d);

// A verified structural match: construct(spec) relabelled by mapping
// equals the input (or its reverse when reversed is set). mapping[i] is
// the input vertex playing canonical role i.
struct FamilyMatch {
  Family family = Family::D1;
  bool reversed = false;
  std::vector<int> mapping;
  FamilySpec spec;
};

enum class Verdict { Extremal, NotExtremalSize, NotFFree, Unrecognized };

struct RecognitionReport {
  Verdict verdict = Verdict::Unrecognized;
  int n = 0;
  int size = 0;
  int expected_size = 0;
  std::optional<TwoWalkWitness> witness;  // set when verdict is NotFFree
  std::vector<FamilyMatch> matches;       // nonempty iff verdict is Extremal
  AuditReport audit;
};

const char* verdict_name(Verdict v);

// Tries to express d as a relabelling of one family member. The match,
// if any, is verified by rebuilding from the recovered spec. reversed
// is recorded unchanged into the result.
std::optional<FamilyMatch> match_family(const Digraph& d, Family f, bool reversed);

// Full classification for n >= 8: size gate, admissibility gate, then
// template matching of d and reverse(d) against every parity-compatible
// family. All verified matches are reported; Unrecognized on a digraph
// that passed both gates means the matcher failed on a digraph the
// classification says it must cover, so treat it as a defect here.
RecognitionReport recognize(const Digraph& d);

// Degree-signature backtracking isomorphism test. Intended for the
// small orders the rest of this library works at.
bool is_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace ffree

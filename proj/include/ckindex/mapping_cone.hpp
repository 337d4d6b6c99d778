#pragma once

#include <ckindex/aps_index.hpp>
#include <ckindex/graph_ktheory.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ckindex {

struct MembershipResult {
  bool member = false;
  std::vector<std::string> diagnostics;
};

/// v is in V(F, A): v v^* v = v and v^*v, vv^* in F, block by block.
MembershipResult vfa_membership(const std::vector<Element>& blocks);

/// Putnam representative of a class in K0(M(F, A)) with its invariants.
class ConeClass {
 public:
  ConeClass(const AFCore& core, AdmissibleIsometry rep);

  const AdmissibleIsometry& representative() const noexcept { return rep_; }
  const K0FClass& source_class() const noexcept { return source_; }  // [v^*v]
  const K0FClass& range_class() const noexcept { return range_; }    // [vv^*]
  const K0FClass& index_class() const noexcept { return index_; }
  const PairingReport& pairing_report() const noexcept { return pairing_; }

 private:
  AdmissibleIsometry rep_;
  K0FClass source_;
  K0FClass range_;
  K0FClass index_;
  PairingReport pairing_;
};

/// ev_*[v] = [v^*v] - [vv^*] in K0(F).
K0FClass ev_star(const AFCore& core, const ConeClass& c);

struct Relation {
  int sign = 1;
  Element generator;  // S_e P_beta
  std::string label;
};

struct DecompositionReport {
  std::vector<Relation> relations;
  bool pairing_preserved = false;
  bool ev_preserved = false;
};

/// Telescopes a word S_gamma S_delta^* into edge-level classes:
///   [S_alpha P_mu] = sum_{j<|alpha|} [S_{alpha_j} P_{alpha_{j+1}..alpha_n mu}] + [S_{alpha_n} P_mu]
///   [S_alpha S_beta^*] = [S_alpha] - [S_beta]
/// The first form is used when delta is a suffix of gamma. Invariance of
/// ev_* and of the pairing is checked and reported.
DecompositionReport decompose_relations(const AFCore& core, const Element& word);

enum class ConeEquality { equal, unequal, unknown };
const char* to_string(ConeEquality e);

/// Decided by the index isomorphism K0(M(F,A)) -> K0(F) on connected graphs
/// with no sources and no sinks; elsewhere differing invariants give
/// `unequal` and matching ones `unknown`.
ConeEquality cone_equal(const AFCore& core, const ConeClass& a, const ConeClass& b);

struct MappingConeGroups {
  AbelianGroup k1_of_A;
  AbelianGroup k0_of_A;
  bool k1_cone_zero = false;  // j_* onto K0(A)
  std::string k1_certificate;
  bool index_isomorphism = false;  // connected, no sources, no sinks
  ColimitDescription k0_of_F;
  std::optional<std::string> k0_closed_form;
  std::string ev_image;  // ker(j_*) = (1 - B) K0(F)
  std::optional<std::string> ev_image_closed_form;
  std::string description;
};

MappingConeGroups mapping_cone_k_groups(const GraphPtr& g);

}  // namespace ckindex

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artin/core_words.hpp"
#include "artin/geodesic_analysis.hpp"
#include "artin/oracle.hpp"
#include "artin/rewriting.hpp"

namespace artin {

// The four integers attached to a neighbor of the removed vertex; the
// edge label is 2k.
struct VertexParams {
  int k = 0;
  int p_plus = 0;
  int p_minus = 0;
  int n_minus = 0;
  int n_plus = 0;
};

VertexParams vertex_params(int k);

// Deletes every occurrence of r and freely reduces: the retraction onto
// the parabolic subgroup away from r.
Word psi(const Word& w, VertexId r);

enum class Sign { plus, minus };
inline const char* to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

struct NeighborInfo {
  VertexId vertex = 0;
  int k = 0;
  VertexParams params;
};

// Everything the kernel construction needs for one (graph, r) choice:
// the subgraph, its neighbor parameters, the poly-free compatible order
// with neighbors ranked by ascending k, and engines for both groups.
class KernelContext {
 public:
  KernelContext(const ArtinGraph& ambient, VertexId r,
                std::optional<LexOrder> order = std::nullopt,
                SearchBudget budget = {});

  const ArtinGraph& ambient() const { return ambient_; }
  const ArtinGraph& g1() const { return g1_; }
  VertexId removed() const { return r_; }
  const std::vector<NeighborInfo>& neighbors() const { return neighbors_; }
  const NeighborInfo* find_neighbor(VertexId v) const;
  const LexOrder& order() const { return order_; }
  const Normalizer& nf1() const { return *nf1_; }
  bool ambient_large() const { return ambient_large_; }
  // only available when the ambient graph is large
  const Normalizer& nf_ambient() const;

 private:
  ArtinGraph ambient_;
  ArtinGraph g1_;
  VertexId r_;
  bool ambient_large_ = false;
  std::vector<NeighborInfo> neighbors_;
  LexOrder order_;
  std::unique_ptr<Normalizer> nf1_;
  std::unique_ptr<Normalizer> nf_ambient_;
};

struct OmegaMembership {
  VertexId vertex = 0;
  Sign sign = Sign::plus;
  friend bool operator==(const OmegaMembership&, const OmegaMembership&) = default;
};

// All (i, sign) with a geodesic representative of g starting b_i^{p_i^+}
// (plus) or b_i^{n_i^-} (minus); at most two, never (i,+) with (i,-).
std::vector<OmegaMembership> omega_membership(const Word& g, const KernelContext& ctx);

bool in_lambda(const Word& g, const KernelContext& ctx);

// sl(b_i^{-k_i} g) for sign +, sl(b_i^{k_i} g) for sign -.
Word rho(const Word& g, VertexId i, Sign sign, const KernelContext& ctx);

// Componentwise rho; elements already in Lambda stay put.
std::vector<Word> rho_set(const std::vector<Word>& set, const KernelContext& ctx);

struct DeltaResult {
  std::vector<Word> set;   // subset of Lambda, sorted shortlex
  std::size_t alpha = 0;   // smallest l with rho^l(g) inside Lambda
};

DeltaResult delta(const Word& g, const KernelContext& ctx);

struct KernelGenerator {
  Word conjugator;  // shortlex form; r^{conjugator}
};

// One instantiated relation R(h): r^{h} rewritten as a product of
// conjugates of shorter kernel generators.
struct RelationInstance {
  Word base;        // h, shortlex form
  VertexId vertex = 0;
  Sign sign = Sign::plus;
  KernelGenerator lhs;
  std::vector<std::pair<KernelGenerator, int>> rhs;  // exponents +-1
};

RelationInstance instantiate_relation(const Word& h, VertexId i, Sign sign,
                                      const KernelContext& ctx, bool verify = true);

// Flattened A_Gamma words of the two sides, for external checking.
std::pair<Word, Word> flatten_relation(const RelationInstance& rel, VertexId r);

struct Elimination {
  Word generator;  // the removed r^{generator}
  RelationInstance via;
};

// Bounded-radius run of the free-basis construction: processes the
// two-membership elements in shortlex order, eliminating the shortlex
// larger member of each delta pair.
struct EliminationState {
  VertexId removed = 0;
  std::size_t radius = 0;
  std::vector<Word> retained;
  std::vector<Elimination> eliminated;
  std::vector<Word> omega_index;  // the h_k processed, in order
  std::vector<Word> escaped;      // h_k whose delta chain exceeded budgets
};

EliminationState eliminate(const ArtinGraph& g, VertexId r, std::size_t radius,
                           std::optional<LexOrder> order = std::nullopt);

std::string format_elimination(const EliminationState& st, const ArtinGraph& g);

struct TowerStep {
  VertexId removed = 0;
  EliminationState state;
};

// Greedy removal schedule over an even graph; every step's remaining
// graph must be large even, else UnsupportedPresentationError.
std::vector<TowerStep> poly_free_tower(const ArtinGraph& g, std::size_t radius = 4);

// Admissible removals: every edge not incident to v has even label >= 4.
std::vector<VertexId> admissible_removals(const ArtinGraph& g);

}  // namespace artin

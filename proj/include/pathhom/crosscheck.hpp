#pragma once

#include "pathhom/chains.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/homology.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pathhom {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct RandomDigraphSpec {
    std::size_t min_vertices = 2;
    std::size_t max_vertices = 6;
    double arrow_probability = 0.35;
    bool asymmetric = false;  // reject the second arrow of a symmetric pair
    std::uint64_t seed = kDefaultSeed;
};

/// Erdos-Renyi on ordered pairs. The same spec always yields the same sequence.
class RandomDigraphs {
public:
    explicit RandomDigraphs(RandomDigraphSpec spec) : spec_(spec), rng_(spec.seed) {}
    Digraph next();
    std::mt19937_64& engine() { return rng_; }

private:
    RandomDigraphSpec spec_;
    std::mt19937_64 rng_;
};

bool bernoulli(std::mt19937_64& rng, double p);

/// A map into a random asymmetric target; source arrows are drawn only where
/// the images coincide or form a target arrow.
DigraphMap random_map(std::mt19937_64& rng, std::size_t max_vertices, double p, bool asymmetric_source);

/// Random combination of 1..4 paths of the given degree on vertices 0..n-1.
/// Endpoints may be fixed; regular=true avoids repeated consecutive vertices.
struct RandomChainShape {
    std::size_t vertices = 6;
    int degree = 2;
    std::optional<VertexIndex> tail;
    std::optional<VertexIndex> head;
    bool regular = false;
};
Chain random_chain(std::mt19937_64& rng, const RandomChainShape& shape);
/// Random integral combination of allowed paths of G (zero if there are none).
Chain random_allowed_chain(std::mt19937_64& rng, const Digraph& g, int degree);

/// Betti number over Q from rational null spaces only (no Hermite/Smith forms),
/// with its own path enumeration and differentials.
std::size_t oracle_betti(const Digraph& g, const TheorySpec& spec, int n);
/// Rank of the chains whose unsigned face sums are all allowed.
std::size_t oracle_pi_rank(const Digraph& g, int n);

/// nullopt on success, otherwise a description of the violation.
using CheckResult = std::optional<std::string>;

CheckResult check_primitive_equals_path(const Digraph& g, int n_max);
CheckResult check_reversal_primitive(const Digraph& g, int n_max);
CheckResult check_reversal_cluster(const Digraph& g, int n_max);
CheckResult check_reversal_tail_head(const Digraph& g, int n_max);
/// Cluster homology of the directed suspension against H_{n-2}(G), 2 <= n <= n_max.
CheckResult check_directed_suspension(const Digraph& g, int n_max);
CheckResult check_directed_suspension_reduced(const Digraph& g, int n_max);
CheckResult check_cone_suspension(const Digraph& g, int n_max);
CheckResult check_endpoint_decomposition(const Digraph& g, int n_max);
CheckResult check_membership_by_components(std::mt19937_64& rng, const Digraph& g, int n_max);
CheckResult check_locality(const Digraph& g, int n_max);
CheckResult check_cluster_projection_morphism(const Digraph& g, int n_max);
CheckResult check_oracle_betti(const Digraph& g, int n_max);
CheckResult check_oracle_pi_rank(const Digraph& g, int n_max);
CheckResult check_differential_squares(std::mt19937_64& rng);
CheckResult check_projection_diagrams(std::mt19937_64& rng);
/// f# commutes with the boundary on allowed chains (target asymmetric).
CheckResult check_induced_map_commutes(std::mt19937_64& rng, const DigraphMap& f);
/// f# is a chain map on every primitive theory and induces homology maps.
CheckResult check_functoriality(std::mt19937_64& rng, const DigraphMap& f, int n_max);

struct TheoremResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t instances = 100;
    std::size_t max_vertices = 6;
    int max_dim = 4;
};

struct SuiteReport {
    std::vector<TheoremResult> results;

    bool passed() const;
    const TheoremResult* find(const std::string& name) const;
};

/// Every property family over seeded random instances; failures carry the
/// offending digraph in the text format.
SuiteReport run_theorem_suite(const SuiteOptions& options);
std::string to_string(const SuiteReport& report);

}  // namespace pathhom

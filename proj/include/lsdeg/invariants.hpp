#pragma once

#include "lsdeg/superalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lsdeg {

constexpr std::uint64_t kDefaultSeed = 20240917;

// Maps D of the given parity with alpha*D[x,y] = beta*(-1)^{|D||x|}[Dx,y] + gamma*[x,Dy].
struct DerivationQuery {
    GaussianRational alpha{1}, beta{1}, gamma{1};
    int parity = 0;

    friend bool operator==(const DerivationQuery&, const DerivationQuery&) = default;
    friend bool operator<(const DerivationQuery& a, const DerivationQuery& b) {
        if (a.parity != b.parity) return a.parity < b.parity;
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        if (a.beta != b.beta) return a.beta < b.beta;
        return a.gamma < b.gamma;
    }
    std::string str() const;
};

struct IJResult {
    bool exists = false;
    GaussianRational value;

    static IJResult not_defined() { return {}; }
    static IJResult of(GaussianRational v) { return {true, std::move(v)}; }
    friend bool operator==(const IJResult&, const IJResult&) = default;
    std::string str() const { return exists ? value.str() : "none"; }
};

using IJGrid = std::vector<std::pair<int, int>>;

struct InvariantProfile {
    int orbit_dim = 0;
    int gamma_rank = 0;
    std::pair<int, int> derived{0, 0};
    bool traceless = true;
    std::map<std::pair<int, int>, IJResult> ij;
    std::map<DerivationQuery, int> derivation_dims;

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

IJGrid default_grid();
std::vector<DerivationQuery> default_queries();

int derivation_dim(const Algebra& a, const DerivationQuery& q);
int orbit_dim(const Algebra& a);
IJResult ij_invariant(const Algebra& a, int i, int j, int samples = 5, std::uint64_t seed = kDefaultSeed);
// Same sampled pairs for every grid entry.
std::map<std::pair<int, int>, IJResult> ij_invariants(const Algebra& a, const IJGrid& grid, int samples = 5,
                                                      std::uint64_t seed = kDefaultSeed);
InvariantProfile invariant_profile(const Algebra& a, const IJGrid& grid = default_grid(),
                                   const std::vector<DerivationQuery>& queries = default_queries(), int samples = 5,
                                   std::uint64_t seed = kDefaultSeed);

struct CertifierConfig {
    IJGrid grid = default_grid();
    std::vector<DerivationQuery> queries = default_queries();
    int samples = 5;
    std::uint64_t seed = kDefaultSeed;
};

enum class Rule { OrbitDim, GammaVanishing, DerivedDims, DerivationDims, Traceless, IJInvariant, FunctorRecursion };

std::string rule_name(Rule r);

struct NondegenerationCertificate {
    Rule rule = Rule::OrbitDim;
    std::string lhs_value;
    std::string rhs_value;
    std::string human_reason;
    std::optional<DerivationQuery> query;
    int parity = -1;
    std::pair<int, int> ij{0, 0};
    std::optional<Functor> functor;
    std::shared_ptr<const NondegenerationCertificate> inner;

    // Rule name with its arguments, e.g. "FunctorRecursion(F, DerivedDims[1])".
    std::string label() const;
};

// Lazily evaluated invariants of one algebra, shared by many certifier calls.
class AlgebraInfo {
public:
    AlgebraInfo(Algebra a, const CertifierConfig& cfg);

    const Algebra& algebra() const { return a_; }
    const CertifierConfig& config() const { return cfg_; }

    int orbit_dim();
    int gamma_rank();
    std::pair<int, int> derived();
    bool traceless();
    IJResult ij(int i, int j);
    int derivation(const DerivationQuery& q);
    AlgebraInfo& functor(Functor f);

    // First invariant (to the given functor depth) that differs, or nullopt when all agree.
    std::optional<std::string> separating_invariant(AlgebraInfo& other, int depth);

private:
    Algebra a_;
    CertifierConfig cfg_;
    std::optional<int> orbit_, gamma_rank_;
    std::optional<std::pair<int, int>> derived_;
    std::optional<bool> traceless_;
    std::map<std::pair<int, int>, IJResult> ij_;
    std::map<DerivationQuery, int> der_;
    std::map<int, std::unique_ptr<AlgebraInfo>> functors_;
};

std::optional<NondegenerationCertificate> certify(AlgebraInfo& g, AlgebraInfo& h, int depth,
                                                  const std::vector<DerivationQuery>& extra_queries = {});
std::optional<NondegenerationCertificate> certify_nondegeneration(const Algebra& g, const Algebra& h, int depth = 2,
                                                                  const CertifierConfig& cfg = {});

// Re-evaluates the cited invariants and checks the stated inequality.
bool recheck_certificate(const NondegenerationCertificate& c, const Algebra& g, const Algebra& h,
                         const CertifierConfig& cfg = {});

}  // namespace lsdeg

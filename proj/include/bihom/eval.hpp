#pragma once

#include <cstdint>
#include <map>

#include "bihom/ir.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

/// Binds every symbol of a signature to concrete data. An action symbol is
/// bound to one matrix per basis element of the acting sort: l(x)v with
/// x = sum x_i e_i evaluates as sum_i x_i (family[i] v).
struct ModelBinding {
    const Signature* sig = nullptr;
    std::vector<int> sort_dims;                    // per sort
    std::vector<Matrix> map_bindings;              // per map symbol
    std::vector<Tensor3> prod_bindings;            // per prod symbol
    std::vector<std::vector<Matrix>> act_bindings; // per act symbol
    std::map<std::string, Scalar> scalar_params;

    /// Shape-checks every binding against the signature; throws Error.
    void validate() const;
};

/// Variable assignment: vectors per declared variable, in declaration order.
using Assignment = std::vector<Vec>;

struct Failure {
    std::vector<int> tuple;  // 1-based basis indices, one per variable
    Vec residual;
    bool operator==(const Failure& o) const { return tuple == o.tuple && residual == o.residual; }
};

enum class CheckMode { Exhaustive, Random };

struct CheckReport {
    std::string identity;
    bool pass = false;
    long tuples_checked = 0;
    std::vector<Failure> failures;  // lexicographic tuple order, capped
    long failure_count = 0;         // total, including capped-away ones
    CheckMode mode = CheckMode::Exhaustive;
    std::uint64_t seed = 0;         // random mode only
};

struct CheckOptions {
    int failure_cap = 16;
    long max_tuples = 1000000;  // exhaustive sweep budget (product of dims)
    int workers = 0;            // 0 = read BIHOM_WORKERS, default 1
};

/// Exact value of one expression under an assignment covering its variables.
Vec eval_expr(const Expr& e, const ModelBinding& b, const Assignment& asg,
              const std::vector<VarDecl>& vars);

/// Signed, parameter-resolved residual of one identity at an assignment.
Vec residual(const Identity& id, const ModelBinding& b, const Assignment& asg);

/// Exhaustive sweep over all basis tuples of every identity in the set.
/// Multilinearity makes the basis sweep complete, and exact arithmetic makes
/// pass/fail sharp. Throws Error when the tuple budget is exceeded.
std::vector<CheckReport> check_identities(const IdentitySet& set, const ModelBinding& b,
                                          const CheckOptions& opts = {});

/// Same residual computation on pseudo-random basis tuples reproducible from
/// the seed. A fail is definitive, a pass is probabilistic.
std::vector<CheckReport> spot_check(const IdentitySet& set, const ModelBinding& b, long samples,
                                    std::uint64_t seed, const CheckOptions& opts = {});

bool all_pass(const std::vector<CheckReport>& reports);

/// Deterministic pseudo-random stream used by spot_check and the random
/// rational assignments of the soundness property. Multiplicative
/// congruential generator modulo 2^64 with multiplier 6364136223846793005;
/// the state is forced odd so the sequence reproduces on any platform.
class Mcg64 {
public:
    explicit Mcg64(std::uint64_t seed) : s_((seed << 1) | 1u) { next(); }
    std::uint64_t next() {
        s_ *= 6364136223846793005ULL;
        return s_ >> 16;
    }
    /// Uniform-ish draw in [0, n).
    int below(int n) { return int(next() % std::uint64_t(n)); }
    /// Small rational with numerator in [-9, 9] and denominator in [1, 4].
    Scalar rational() {
        long num = long(next() % 19) - 9;
        long den = long(next() % 4) + 1;
        return Scalar(num, den);
    }

private:
    std::uint64_t s_;
};

/// Evaluates every identity on `count` random rational (non-basis)
/// assignments; returns the names of identities with a nonzero residual.
/// Used to property-test that an exhaustive pass extends to all elements.
std::vector<std::string> random_assignment_failures(const IdentitySet& set, const ModelBinding& b,
                                                    int count, std::uint64_t seed);

}  // namespace bihom

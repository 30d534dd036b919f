#ifndef HAMPRESERVE_INSTANCES_HPP
#define HAMPRESERVE_INSTANCES_HPP

#include <cstdint>
#include <string>

#include "hampreserve/graph.hpp"

namespace hp {

/// xorshift64* generator: fixed algorithm so instances reproduce bit-exactly
/// anywhere. Seed 0 is remapped to a fixed odd constant.
class Rng {
   public:
    explicit Rng(uint64_t seed);
    uint64_t next();
    /// Uniform in [0, n) by rejection.
    uint64_t below(uint64_t n);
    /// Fisher-Yates with this generator.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

   private:
    uint64_t state_;
};

/// Generation parameters; rendered into the instance file header.
struct InstanceSpec {
    std::string family;
    int n = 0, k = 0, ell = 0;
    uint64_t seed = 0;
    int surplus = 0;

    std::string header() const;
};

/// Random graph with minimum degree >= ceil(n/2) + surplus, by seeded edge
/// removal from K_n under degree floors. Requires n >= 3 and a feasible
/// surplus.
Graph gen_dirac(int n, uint64_t seed, int surplus = 0);

/// Two dense sides joined through a planted minimum cut of size k, with
/// delta >= n/2 and kappa = k (validated). crossing_rich concentrates extra
/// crossing edges through one hub vertex so direct crossing pairs exist;
/// the default keeps all crossings inside the cut. Requires n >= 4k+8.
Graph gen_barbell_dirac(int n, int k, uint64_t seed, bool crossing_rich = false);

/// Two cliques K_{(n+k-1)/2} sharing k-1 vertices: delta = (n+k-3)/2 and
/// kappa = k-1 exactly. Requires n+k odd, n >= k+3.
Graph gen_ch_tightness(int n, int k);

}  // namespace hp

#endif

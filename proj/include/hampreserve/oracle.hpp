#ifndef HAMPRESERVE_ORACLE_HPP
#define HAMPRESERVE_ORACLE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hampreserve/graph.hpp"
#include "hampreserve/hamilton.hpp"
#include "hampreserve/preserve.hpp"

namespace hp {

/// Per-check verdicts with counterexample payloads; the report passes iff
/// every sub-check passes.
struct VerificationReport {
    struct Check {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Check> checks;
    bool pass = true;

    void add(const std::string& name, bool ok, const std::string& detail = "");
    nlohmann::json to_json() const;
};

/// Re-derives every certificate claim without touching preserve internals:
/// each cycle Hamiltonian in G, pairwise edge-disjoint, and the remainder's
/// connectivity >= k (= k when exact). Hash mismatch throws
/// StaleCertificateError.
VerificationReport verify_certificate(const Graph& g,
                                      const PreserveCertificate& cert, int k,
                                      bool exact);

/// All Hamiltonian cycles up to rotation and reflection (canonical form:
/// starts at the least vertex, lesser neighbor second), capped at limit.
/// Requires n <= 14.
std::vector<VertexSequence> brute_ham_enum(const Graph& g, long long limit);

/// Exact maximum number of edge-disjoint edge-pairs by branch-and-bound over
/// the edge-independence structure. Requires |E| <= 24.
int brute_max_pairs(const Graph& g);

/// True iff some Hamiltonian cycle H has kappa(G - E(H)) >= k. Requires
/// n <= 12.
bool brute_preserving_exists(const Graph& g, int k);

/// Vertex connectivity by exhaustive cut enumeration; the trust anchor for
/// the flow-based kappa. Requires n <= 10.
int brute_kappa(const Graph& g);

}  // namespace hp

#endif

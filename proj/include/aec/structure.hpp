#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aec/graph.hpp"
#include "aec/rational.hpp"

namespace aec {

enum class ConfigKind { C1, C2, C3, C4, C5, C6, C7, C8, C9 };

const char* config_kind_name(ConfigKind k);

// A reducible spot: either a vertex of degree <= 3 or one of the nine
// big/small-vertex configurations with its center and witness neighbors.
struct Reducible {
    enum class Variant { LowDegree, Config };
    Variant variant = Variant::LowDegree;
    ConfigKind kind = ConfigKind::C1;  // meaningful for Config only
    int center = -1;
    std::vector<int> witnesses;  // C1..C4: the 19^- neighbors quoted by the
                                 // configuration; C5..C9: all 7^- neighbors
};

// Low-degree vertex first (lowest id), then vertices in ascending id order
// testing kinds C1..C9; nullopt when nothing matches.
std::optional<Reducible> find_reducible(const Graph& g);

// The configuration scan alone, ignoring the low-degree shortcut.  This is
// what the elimination engine calls once every non-isolated vertex has
// degree >= 4.
std::optional<Reducible> find_configuration(const Graph& g);

// Verifies a Reducible against a degree profile (detection soundness).
bool recheck_reducible(const Graph& g, const Reducible& r);

struct ChargeTransfer {
    int from = 0;  // big vertex (degree >= 20)
    int to = 0;    // small vertex
    Rat amount;    // 1 or 3/4
};

// Ledger of the discharging run: w(v) = d(v) - 8, then R1 (big vertex
// gives 1 to each adjacent 4-vertex) and R2 (big vertex gives 3/4 to each
// adjacent vertex of degree 5..7), applied literally.
struct ChargeReport {
    std::vector<Rat> initial;
    std::vector<Rat> final_;
    std::vector<ChargeTransfer> transfers;
    Rat total;  // sum of both columns; conservation is asserted
};

ChargeReport discharging_audit(const Graph& g);

struct LemmaViolation {
    std::string note;
    ChargeReport charges;
};

// Under the hypotheses delta(G) >= 4 and e(G) <= 4 v(G) - 1, one of the
// configurations must occur; a LemmaViolation result would falsify that
// and carries the full charge ledger for inspection.
std::variant<Reducible, LemmaViolation> verify_lemma(const Graph& g);

}  // namespace aec

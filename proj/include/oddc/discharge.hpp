#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "oddc/classify.hpp"
#include "oddc/embedding.hpp"

namespace oddc {

// Exact charge in quarter units. Every rule amount is a multiple of 1/4,
// so no rounding can occur anywhere in the ledger.
struct Charge {
    std::int64_t quarters = 0;

    static Charge from_quarters(std::int64_t q) { return Charge{q}; }
    static Charge whole(std::int64_t units) { return Charge{units * 4}; }

    Charge operator+(Charge o) const { return Charge{quarters + o.quarters}; }
    Charge operator-(Charge o) const { return Charge{quarters - o.quarters}; }
    Charge& operator+=(Charge o) { quarters += o.quarters; return *this; }
    Charge& operator-=(Charge o) { quarters -= o.quarters; return *this; }
    auto operator<=>(const Charge&) const = default;

    bool negative() const { return quarters < 0; }
    // Reduced fraction, e.g. "3/2", "-2", "0".
    std::string str() const;
    // Always with denominator, e.g. "0/1", "-3/2".
    std::string ratio_str() const;
};

// Ledger elements: vertices then faces.
struct ElementId {
    bool is_face = false;
    int id = 0;

    std::string str() const {
        return (is_face ? "f" : "v") + std::to_string(id);
    }
    auto operator<=>(const ElementId&) const = default;
};

struct Transfer {
    int rule = 0;  // 1..4
    ElementId from;
    ElementId to;
    Charge amount;
};

struct ChargeLedger {
    std::vector<Charge> vertex_initial;
    std::vector<Charge> face_initial;
    std::vector<Charge> vertex_final;
    std::vector<Charge> face_final;
    std::vector<Transfer> transfers;

    Charge initial_of(ElementId e) const {
        return e.is_face ? face_initial[e.id] : vertex_initial[e.id];
    }
    Charge final_of(ElementId e) const {
        return e.is_face ? face_final[e.id] : vertex_final[e.id];
    }
    Charge total_initial() const;
    Charge total_final() const;
};

// mu(v) = 2 d(v) - 6 and mu(f) = d(f) - 6; no transfers yet
// (finals equal initials).
ChargeLedger initial_charges(const RotationSystem& rs, const FaceSet& faces);

// Discharging rules:
//  R1  every vertex sends 1/2 to each incident 4-face (once per corner);
//      every non-convenient vertex sends 1/2 to each incident 5-face.
//  R2  every 4+-vertex sends 3/2 / 5/4 / 1 to each adjacent bad /
//      semi-bad / non-bad 2-vertex.
//  R3  every non-convenient vertex sends 1 to each adjacent poor
//      5_3-vertex and 1/2 to each other adjacent convenient vertex.
//  R4  every non-convenient 6+-vertex sends 1/4 to each adjacent
//      non-convenient 4-vertex that is adjacent to exactly one
//      convenient vertex.
// "Non-convenient" always means a 4+-vertex that is not convenient.
ChargeLedger apply_rules(const RotationSystem& rs, const FaceSet& faces);

struct AuditEntry {
    ElementId element;
    Charge final_charge;
    std::string context;
    std::vector<std::string> screens;  // shapes the element sits inside
};

struct AuditReport {
    Charge total_initial;
    Charge total_final;
    bool conserved = false;
    int euler_term = 0;  // |V| - |E| + |F|
    bool total_matches_euler = false;  // total == -6 * euler_term
    std::vector<AuditEntry> negatives;
};

AuditReport audit(const RotationSystem& rs, const FaceSet& faces);
AuditReport audit(const RotationSystem& rs, const FaceSet& faces,
                  const ChargeLedger& ledger);

// "transfer R2 v12 -> v7 : 3/2" and "final v7 : 0" lines.
void write_ledger(std::ostream& os, const ChargeLedger& ledger);

}  // namespace oddc

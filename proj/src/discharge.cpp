#include "oddc/discharge.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>

namespace oddc {

std::string Charge::str() const {
    std::int64_t num = quarters, den = 4;
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) return "0";
    num /= g;
    den /= g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string Charge::ratio_str() const {
    std::int64_t num = quarters, den = 4;
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) return "0/1";
    num /= g;
    den /= g;
    return std::to_string(num) + "/" + std::to_string(den);
}

Charge ChargeLedger::total_initial() const {
    Charge t;
    for (Charge c : vertex_initial) t += c;
    for (Charge c : face_initial) t += c;
    return t;
}

Charge ChargeLedger::total_final() const {
    Charge t;
    for (Charge c : vertex_final) t += c;
    for (Charge c : face_final) t += c;
    return t;
}

ChargeLedger initial_charges(const RotationSystem& rs, const FaceSet& faces) {
    const Graph& g = rs.graph();
    ChargeLedger ledger;
    ledger.vertex_initial.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        ledger.vertex_initial.push_back(Charge::whole(2 * g.degree(v) - 6));
    ledger.face_initial.reserve(faces.face_count());
    for (int f = 0; f < faces.face_count(); ++f)
        ledger.face_initial.push_back(Charge::whole(faces.degree(f) - 6));
    ledger.vertex_final = ledger.vertex_initial;
    ledger.face_final = ledger.face_initial;
    return ledger;
}

ChargeLedger apply_rules(const RotationSystem& rs, const FaceSet& faces) {
    const Graph& g = rs.graph();
    ChargeLedger ledger = initial_charges(rs, faces);
    auto vc = classify_vertices(g);
    auto badness = classify_two_vertices(rs, faces);
    std::vector<TwoVertexKind> kind_of(g.vertex_count(), TwoVertexKind::NonBad);
    for (const auto& b : badness) kind_of[b.vertex] = b.kind;

    auto poors = poor_relations(rs, faces);
    auto is_poor_to = [&](int v, int u) {
        for (const auto& p : poors)
            if (p.poor_vertex == v && p.beneficiary == u) return true;
        return false;
    };

    auto send = [&](int rule, ElementId from, ElementId to, std::int64_t q) {
        Charge amount = Charge::from_quarters(q);
        ledger.transfers.push_back(Transfer{rule, from, to, amount});
        if (from.is_face)
            ledger.face_final[from.id] -= amount;
        else
            ledger.vertex_final[from.id] -= amount;
        if (to.is_face)
            ledger.face_final[to.id] += amount;
        else
            ledger.vertex_final[to.id] += amount;
    };

    // R1: per corner, in face-walk order.
    for (int f = 0; f < faces.face_count(); ++f) {
        int deg = faces.degree(f);
        if (deg != 4 && deg != 5) continue;
        for (int v : faces.walks[f]) {
            if (deg == 4)
                send(1, ElementId{false, v}, ElementId{true, f}, 2);
            else if (is_nonconvenient_4plus(vc[v]))
                send(1, ElementId{false, v}, ElementId{true, f}, 2);
        }
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        // R2: 4+-vertices pay their 2-neighbors by badness.
        if (vc[v].degree >= 4)
            for (int u : g.neighbors(v))
                if (vc[u].degree == 2) {
                    std::int64_t q = kind_of[u] == TwoVertexKind::Bad       ? 6
                                     : kind_of[u] == TwoVertexKind::SemiBad ? 5
                                                                            : 4;
                    send(2, ElementId{false, v}, ElementId{false, u}, q);
                }
        // R3/R4: non-convenient senders only.
        if (!is_nonconvenient_4plus(vc[v])) continue;
        for (int u : g.neighbors(v)) {
            if (vc[u].convenient) {
                bool poor = vc[u].degree == 5 && vc[u].two_neighbor_count == 3 &&
                            is_poor_to(u, v);
                send(3, ElementId{false, v}, ElementId{false, u}, poor ? 4 : 2);
            }
        }
        if (vc[v].degree >= 6)
            for (int u : g.neighbors(v)) {
                if (vc[u].degree != 4 || vc[u].convenient) continue;
                int convenient_nbrs = 0;
                for (int w : g.neighbors(u))
                    if (vc[w].convenient) ++convenient_nbrs;
                if (convenient_nbrs == 1)
                    send(4, ElementId{false, v}, ElementId{false, u}, 1);
            }
    }
    return ledger;
}

AuditReport audit(const RotationSystem& rs, const FaceSet& faces,
                  const ChargeLedger& ledger) {
    const Graph& g = rs.graph();
    AuditReport report;
    report.total_initial = ledger.total_initial();
    report.total_final = ledger.total_final();
    report.conserved = report.total_initial == report.total_final;
    report.euler_term = g.vertex_count() - g.edge_count() + faces.face_count();
    report.total_matches_euler =
        report.total_initial == Charge::whole(-6 * report.euler_term);

    auto screens = run_screens(rs, faces);
    auto vc = classify_vertices(g);
    auto fc = classify_faces(rs, faces);
    auto badness = classify_two_vertices(rs, faces);

    auto screens_containing = [&](ElementId e) {
        std::vector<std::string> hits;
        for (const auto& s : screens) {
            bool in = false;
            if (e.is_face) {
                for (int f : s.faces) in |= (f == e.id);
            } else {
                for (int v : s.vertices) in |= (v == e.id);
            }
            if (in) hits.push_back(s.screen);
        }
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        return hits;
    };

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!ledger.vertex_final[v].negative()) continue;
        AuditEntry entry;
        entry.element = ElementId{false, v};
        entry.final_charge = ledger.vertex_final[v];
        std::string ctx = "degree " + std::to_string(vc[v].degree) + ", " +
                          std::to_string(vc[v].two_neighbor_count) + " 2-neighbors";
        if (vc[v].degree == 2) {
            for (const auto& b : badness)
                if (b.vertex == v)
                    ctx += b.kind == TwoVertexKind::Bad       ? ", bad"
                           : b.kind == TwoVertexKind::SemiBad ? ", semi-bad"
                                                              : ", non-bad";
        } else {
            ctx += vc[v].convenient ? ", convenient" : ", non-convenient";
        }
        entry.context = ctx;
        entry.screens = screens_containing(entry.element);
        report.negatives.push_back(std::move(entry));
    }
    for (int f = 0; f < faces.face_count(); ++f) {
        if (!ledger.face_final[f].negative()) continue;
        AuditEntry entry;
        entry.element = ElementId{true, f};
        entry.final_charge = ledger.face_final[f];
        entry.context = "degree " + std::to_string(fc[f].degree) + ", " +
                        std::to_string(fc[f].two_vertex_count) + " 2-vertices";
        entry.screens = screens_containing(entry.element);
        report.negatives.push_back(std::move(entry));
    }
    return report;
}

AuditReport audit(const RotationSystem& rs, const FaceSet& faces) {
    return audit(rs, faces, apply_rules(rs, faces));
}

void write_ledger(std::ostream& os, const ChargeLedger& ledger) {
    for (const auto& t : ledger.transfers)
        os << "transfer R" << t.rule << ' ' << t.from.str() << " -> "
           << t.to.str() << " : " << t.amount.str() << '\n';
    for (std::size_t v = 0; v < ledger.vertex_final.size(); ++v)
        os << "final v" << v << " : " << ledger.vertex_final[v].str() << '\n';
    for (std::size_t f = 0; f < ledger.face_final.size(); ++f)
        os << "final f" << f << " : " << ledger.face_final[f].str() << '\n';
}

}  // namespace oddc

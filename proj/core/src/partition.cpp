#include "reskit/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "reskit/coloring.hpp"

namespace reskit {

namespace {

// Index of u in the colex-sorted vertex list, or -1.
int vertex_index(const LatticePolytope& p, const VecZ& u) {
    const std::vector<VecZ>& vs = p.vertices();
    auto it = std::lower_bound(vs.begin(), vs.end(), u, colex_less);
    if (it != vs.end() && *it == u) return static_cast<int>(it - vs.begin());
    return -1;
}

std::string points_text(const std::vector<VecZ>& pts) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << " ";
        os << to_string(pts[i]);
    }
    os << "}";
    return os.str();
}

} // namespace

std::vector<int> allowed_classes(const LatticePolytope& p, const VertexPartition& vp,
                                 const VecZ& point) {
    if (vp.cls.size() != p.vertices().size())
        throw PreconditionViolated("allowed_classes: vertex partition has wrong size");
    int vi = vertex_index(p, point);
    if (vi >= 0) return {vp.cls[vi]};
    FaceRef mf = p.minimal_face(point);
    std::set<int> cl;
    for (int v : mf.vertex_set) cl.insert(vp.cls[v]);
    return std::vector<int>(cl.begin(), cl.end());
}

std::vector<std::vector<VecZ>> induce_row(const LatticePolytope& p, const VertexPartition& vp,
                                          int num_classes) {
    if (vp.cls.size() != p.vertices().size())
        throw PreconditionViolated("induce_row: vertex partition has wrong size");
    for (int c : vp.cls) {
        if (c < 0 || c >= num_classes) throw PreconditionViolated("induce_row: class out of range");
    }
    std::vector<std::vector<VecZ>> row(num_classes);
    for (const VecZ& u : p.lattice_points()) {
        int vi = vertex_index(p, u);
        int cls;
        if (vi >= 0) {
            cls = vp.cls[vi];
        } else {
            // Tie-break: the colex-smallest vertex of the minimal face, which
            // is the first one since vertices are stored in colex order.
            FaceRef mf = p.minimal_face(u);
            cls = vp.cls[mf.vertex_set[0]];
        }
        row[cls].push_back(u);
    }
    return row;
}

PartitionMatrix induce(const std::vector<LatticePolytope>& family,
                       const std::vector<VertexPartition>& vps) {
    if (family.size() != vps.size()) throw PreconditionViolated("induce: size mismatch");
    PartitionMatrix m;
    const int num_classes = static_cast<int>(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        m.cells.push_back(induce_row(family[i], vps[i], num_classes));
    }
    return m;
}

VertexPartition vertex_classes_of_row(const LatticePolytope& p,
                                      const std::vector<std::vector<VecZ>>& row) {
    VertexPartition vp;
    vp.cls.assign(p.vertices().size(), -1);
    for (std::size_t j = 0; j < row.size(); ++j) {
        for (const VecZ& u : row[j]) {
            int vi = vertex_index(p, u);
            if (vi < 0) continue;
            if (vp.cls[vi] != -1)
                throw PreconditionViolated("vertex_classes_of_row: vertex in two cells");
            vp.cls[vi] = static_cast<int>(j);
        }
    }
    for (int c : vp.cls) {
        if (c == -1) throw PreconditionViolated("vertex_classes_of_row: uncovered vertex");
    }
    return vp;
}

CompatibilityResult compatibility_bruteforce(const std::vector<LatticePolytope>& family,
                                             const PartitionMatrix& m,
                                             const LatticePolytope& sum) {
    const int k = static_cast<int>(family.size());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
        // Odometer over one point from each member's assigned cell.
        std::vector<const std::vector<VecZ>*> cells(k);
        bool empty = false;
        for (int i = 0; i < k; ++i) {
            cells[i] = &m.cells[i][perm[i]];
            if (cells[i]->empty()) empty = true;
        }
        if (empty) continue; // no transversal through an empty cell
        std::vector<std::size_t> pos(k, 0);
        while (true) {
            VecZ s(sum.ambient_dim(), Int(0));
            for (int i = 0; i < k; ++i) s = vadd(s, (*cells[i])[pos[i]]);
            if (!sum.interior_contains(s)) {
                CompatibilityWitness w;
                w.permutation = perm;
                for (int i = 0; i < k; ++i) w.choices.push_back((*cells[i])[pos[i]]);
                w.sum = s;
                return {false, std::move(w)};
            }
            int i = 0;
            while (i < k && pos[i] + 1 == cells[i]->size()) {
                pos[i] = 0;
                ++i;
            }
            if (i == k) break;
            ++pos[i];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {true, std::nullopt};
}

CompatibilityResult compatibility_by_faces(const std::vector<LatticePolytope>& family,
                                           const PartitionMatrix& m,
                                           const LatticePolytope& sum) {
    const int k = static_cast<int>(family.size());
    for (const FaceRef& face : sum.proper_faces()) {
        Mat01 cm = coloring_matrix(family, m, face);
        if (permanent(cm) == 0) continue;

        // Recover a witness transversal: a permutation of classes whose
        // entries are all 1, then a concrete point on the face per member.
        std::vector<int> perm(k, -1);
        std::vector<bool> used(k, false);
        auto fill = [&](auto&& self, int i) -> bool {
            if (i == k) return true;
            for (int j = 0; j < k; ++j) {
                if (used[j] || cm[i][j] == 0) continue;
                used[j] = true;
                perm[i] = j;
                if (self(self, i + 1)) return true;
                used[j] = false;
            }
            return false;
        };
        if (!fill(fill, 0)) throw InternalError("compatibility_by_faces: permanent/witness mismatch");

        CompatibilityWitness w;
        w.permutation = perm;
        VecZ s(sum.ambient_dim(), Int(0));
        for (int i = 0; i < k; ++i) {
            FaceRef mf = family[i].face_of(face.witness);
            Int lo = dot(face.witness, family[i].vertices()[mf.vertex_set[0]]);
            const std::vector<VecZ>& cell = m.cells[i][perm[i]];
            auto it = std::find_if(cell.begin(), cell.end(),
                                   [&](const VecZ& u) { return dot(face.witness, u) == lo; });
            if (it == cell.end()) throw InternalError("compatibility_by_faces: witness cell empty on face");
            w.choices.push_back(*it);
            s = vadd(s, *it);
        }
        w.sum = std::move(s);
        w.face_vertex_set = face.vertex_set;
        return {false, std::move(w)};
    }
    return {true, std::nullopt};
}

ValidationReport validate(const std::vector<LatticePolytope>& family, const PartitionMatrix& m) {
    ValidationReport rep;
    const int k = static_cast<int>(family.size());

    ValidationCheck shape{"grid-shape", true, ""};
    if (m.members() != k) {
        shape.passed = false;
        shape.detail = "expected one row per member";
    } else {
        for (int i = 0; i < k; ++i) {
            if (static_cast<int>(m.cells[i].size()) != k) {
                shape.passed = false;
                shape.detail = "row " + std::to_string(i) + " has wrong class count";
                break;
            }
        }
    }
    rep.checks.push_back(shape);
    if (!shape.passed) {
        rep.ok = false;
        return rep;
    }

    ValidationCheck cover{"rows-partition-lattice-points", true, ""};
    for (int i = 0; i < k && cover.passed; ++i) {
        std::vector<VecZ> all;
        for (const std::vector<VecZ>& cell : m.cells[i]) all.insert(all.end(), cell.begin(), cell.end());
        std::sort(all.begin(), all.end(), colex_less);
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
            cover.passed = false;
            cover.detail = "member " + std::to_string(i) + ": point assigned twice";
            break;
        }
        std::vector<VecZ> expect = family[i].lattice_points();
        if (all != expect) {
            cover.passed = false;
            cover.detail = "member " + std::to_string(i) + ": cells " + points_text(all) +
                           " do not cover lattice points " + points_text(expect);
        }
    }
    rep.checks.push_back(cover);
    if (!cover.passed) {
        rep.ok = false;
        return rep;
    }

    ValidationCheck induced{"induced-from-vertex-partition", true, ""};
    for (int i = 0; i < k && induced.passed; ++i) {
        for (int j = 0; j < k && induced.passed; ++j) {
            for (const VecZ& u : m.cells[i][j]) {
                if (vertex_index(family[i], u) >= 0) continue;
                FaceRef mf = family[i].minimal_face(u);
                bool has_vertex = false;
                for (int vi : mf.vertex_set) {
                    const VecZ& v = family[i].vertices()[vi];
                    if (std::find(m.cells[i][j].begin(), m.cells[i][j].end(), v) != m.cells[i][j].end()) {
                        has_vertex = true;
                        break;
                    }
                }
                if (!has_vertex) {
                    induced.passed = false;
                    induced.detail = "member " + std::to_string(i) + ", class " + std::to_string(j) +
                                     ": point " + to_string(u) +
                                     " shares no class with a vertex of its minimal face";
                    break;
                }
            }
        }
    }
    rep.checks.push_back(induced);

    LatticePolytope sum = minkowski_sum(family);
    CompatibilityResult comp = compatibility_by_faces(family, m, sum);
    ValidationCheck compat{"compatible", comp.compatible, ""};
    if (!comp.compatible && comp.witness) {
        std::ostringstream os;
        os << "classes (";
        for (std::size_t i = 0; i < comp.witness->permutation.size(); ++i) {
            if (i) os << ",";
            os << comp.witness->permutation[i];
        }
        os << ") pick " << points_text(comp.witness->choices) << " with boundary sum "
           << to_string(comp.witness->sum);
        compat.detail = os.str();
    }
    rep.checks.push_back(compat);

    rep.ok = true;
    for (const ValidationCheck& c : rep.checks) rep.ok = rep.ok && c.passed;
    return rep;
}

} // namespace reskit

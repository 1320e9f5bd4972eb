#include "classify.hpp"

#include <algorithm>

#include "canonical.hpp"
#include "error.hpp"
#include "seeds.hpp"

namespace atg {

using nlohmann::json;

std::string to_string(DVerdict v) {
    switch (v) {
        case DVerdict::NotMember: return "not_member";
        case DVerdict::TGraphOdd: return "t_graph_odd";
        case DVerdict::TGraphEven: return "t_graph_even";
        case DVerdict::MoserSpindle: return "moser_spindle";
    }
    return "?";
}

std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::DegreeAtGallaiTree: return "gallai_tree";
        case CaseTag::DegreeAtBadBlock: return "bad_block";
        case CaseTag::MainDeg2GallaiTree: return "deg2_gallai_tree";
        case CaseTag::MainDeg2DegreeAt: return "deg2_degree_at";
        case CaseTag::MainComplete: return "complete";
        case CaseTag::MainInD: return "in_d";
        case CaseTag::MainAt: return "at";
        case CaseTag::Conn1GallaiTree: return "clause1_gallai_tree";
        case CaseTag::Conn2DegreeOne: return "clause2_degree_one";
        case CaseTag::Conn3Deg2GallaiComponent: return "clause3_deg2_gallai_component";
        case CaseTag::Conn4BlockInD: return "clause4_block_in_d";
        case CaseTag::Conn5Cutvertex: return "clause5_cutvertex";
        case CaseTag::ConnAt: return "at";
    }
    return "?";
}

InducedPart induce_part(const Graph& g, const std::vector<int>& vertices) {
    InducedPart part;
    part.graph = g.induced(vertices, &part.old_of_new);
    part.new_of_old.assign(g.n(), -1);
    for (int i = 0; i < part.graph.n(); ++i)
        part.new_of_old[part.old_of_new[i]] = i;
    return part;
}

DMembership membership_d(const LabeledPair& p) {
    if (!p.is_hx()) throw_invalid("membership requires an h_x labeling");
    if (!p.graph.two_connected())
        throw_invalid("membership requires a 2-connected graph");
    int x = p.hx_vertex();
    DMembership out;

    if (auto t = detect_t_graph(p.graph, x)) {
        auto len = t->path_lengths();
        if (len[0] % 2 == len[1] % 2 && len[1] % 2 == len[2] % 2) {
            out.verdict = len[0] % 2 ? DVerdict::TGraphOdd : DVerdict::TGraphEven;
            out.t_witness = std::move(*t);
            return out;
        }
        return out;
    }

    const Graph spindle = moser_spindle();
    if (p.graph.n() == 7 && p.graph.m() == 11 && p.graph.degree(x) == 4) {
        std::vector<int> c1(7, 0), c2(7, 0);
        c1[x] = 1;
        c2[6] = 1;
        auto iso = find_isomorphism(p.graph, c1, spindle, c2);
        if (!iso.empty()) {
            out.verdict = DVerdict::MoserSpindle;
            out.spindle_map = std::move(iso);
        }
    }
    return out;
}

namespace {

json block_list_json(const Graph& g, const BlockDecomposition& dec) {
    json out = json::array();
    for (const auto& b : dec.blocks) {
        json item;
        item["vertices"] = b;
        item["complete"] = block_is_complete(g, b);
        item["odd_cycle"] = block_is_odd_cycle(g, b);
        out.push_back(item);
    }
    return out;
}

// First block (deterministic order) that is neither complete nor an odd
// cycle; -1 if none.
int first_bad_block(const Graph& g, const BlockDecomposition& dec) {
    for (size_t i = 0; i < dec.blocks.size(); ++i)
        if (!block_is_complete(g, dec.blocks[i]) &&
            !block_is_odd_cycle(g, dec.blocks[i]))
            return static_cast<int>(i);
    return -1;
}

json membership_json(const DMembership& m) {
    json out;
    out["verdict"] = to_string(m.verdict);
    if (m.t_witness) {
        out["apex"] = m.t_witness->apex;
        out["triangle"] = {m.t_witness->triangle[0], m.t_witness->triangle[1],
                           m.t_witness->triangle[2]};
        out["path_lengths"] = m.t_witness->path_lengths();
    }
    if (!m.spindle_map.empty()) out["spindle_map"] = m.spindle_map;
    return out;
}

}  // namespace

Classification classify_degree_at(const Graph& g) {
    if (!g.connected())
        throw_invalid("degree-AT classification requires a connected graph");
    auto dec = blocks(g);
    Classification out;
    int bad = first_bad_block(g, dec);
    if (bad < 0) {
        out.at = false;
        out.tag = CaseTag::DegreeAtGallaiTree;
        out.witness["blocks"] = block_list_json(g, dec);
    } else {
        out.at = true;
        out.tag = CaseTag::DegreeAtBadBlock;
        const auto& blk = dec.blocks[bad];
        out.witness["block"] = blk;
        bool cyc = true;
        for (int v : blk) {
            int d = 0;
            for (int w : g.neighbors(v))
                if (std::binary_search(blk.begin(), blk.end(), w)) ++d;
            if (d != 2) cyc = false;
        }
        out.witness["reason"] = cyc ? "even_cycle" : "non_complete_non_cycle";
    }
    return out;
}

Classification classify_two_connected(const LabeledPair& p) {
    if (!p.is_hx())
        throw_invalid("two-connected classification requires an h_x labeling");
    if (!p.graph.two_connected())
        throw_invalid("two-connected classification requires a 2-connected graph");
    const Graph& g = p.graph;
    int x = p.hx_vertex();
    Classification out;
    out.witness["x"] = x;

    if (g.degree(x) == 2) {
        Graph rest = g.removed_vertex(x);
        auto sub = classify_degree_at(rest);
        out.at = sub.at;
        out.tag = sub.at ? CaseTag::MainDeg2DegreeAt : CaseTag::MainDeg2GallaiTree;
        out.witness["g_minus_x"] = sub.witness;
        return out;
    }

    if (block_is_complete(g, [&] {
            std::vector<int> all(g.n());
            for (int v = 0; v < g.n(); ++v) all[v] = v;
            return all;
        }())) {
        out.at = false;
        out.tag = CaseTag::MainComplete;
        return out;
    }

    auto mem = membership_d(p);
    if (mem.member()) {
        out.at = false;
        out.tag = CaseTag::MainInD;
        out.witness["membership"] = membership_json(mem);
        return out;
    }
    out.at = true;
    out.tag = CaseTag::MainAt;
    out.witness["membership"] = membership_json(mem);
    return out;
}

namespace {

// Clause 4 / 5(iii) helper: the block containing a non-cutvertex x, as a
// marked pair, plus whether it belongs to the seed family.
struct BlockMembership {
    bool applicable = false;  // block has >= 3 vertices
    bool member = false;
    std::vector<int> block;
    DMembership membership;
};

BlockMembership x_block_membership(const Graph& g, const BlockDecomposition& dec,
                                   int x) {
    BlockMembership out;
    auto bs = dec.blocks_of(x);
    out.block = dec.blocks[bs.front()];
    if (out.block.size() < 3) return out;
    out.applicable = true;
    auto part = induce_part(g, out.block);
    if (!part.graph.two_connected()) return out;  // bridge block; not a member
    auto mem = membership_d(make_hx(part.graph, part.mapped(x)));
    out.member = mem.member();
    out.membership = std::move(mem);
    return out;
}

}  // namespace

Classification classify_connected(const LabeledPair& p) {
    if (!p.is_hx())
        throw_invalid("connected classification requires an h_x labeling");
    const Graph& g = p.graph;
    if (!g.connected())
        throw_invalid("connected classification requires a connected graph");
    int x = p.hx_vertex();
    Classification out;
    out.witness["x"] = x;
    auto dec = blocks(g);

    // (1) G is a Gallai tree.
    if (first_bad_block(g, dec) < 0) {
        out.at = false;
        out.tag = CaseTag::Conn1GallaiTree;
        out.witness["blocks"] = block_list_json(g, dec);
        return out;
    }

    // (2) d(x) = 1.
    if (g.degree(x) == 1) {
        out.at = false;
        out.tag = CaseTag::Conn2DegreeOne;
        return out;
    }

    // (3) d(x) = 2 and G - x has a Gallai-tree component.
    if (g.degree(x) == 2) {
        std::vector<int> old_of_new;
        Graph rest = g.removed_vertex(x, &old_of_new);
        auto comp = rest.components();
        int k = rest.component_count();
        for (int c = 0; c < k; ++c) {
            std::vector<int> verts;
            for (int v = 0; v < rest.n(); ++v)
                if (comp[v] == c) verts.push_back(v);
            Graph cg = rest.induced(verts);
            if (is_gallai_tree(cg)) {
                out.at = false;
                out.tag = CaseTag::Conn3Deg2GallaiComponent;
                std::vector<int> orig;
                for (int v : verts) orig.push_back(old_of_new[v]);
                out.witness["component"] = orig;
                return out;
            }
        }
    }

    bool x_cut = dec.is_cut_vertex(x);

    // (4) x not a cutvertex, its block in the family, all other blocks
    // complete or odd cycles.
    if (!x_cut) {
        auto bm = x_block_membership(g, dec, x);
        if (bm.applicable && bm.member) {
            bool others_fine = true;
            for (const auto& blk : dec.blocks) {
                if (blk == bm.block) continue;
                if (!block_is_complete(g, blk) && !block_is_odd_cycle(g, blk))
                    others_fine = false;
            }
            if (others_fine) {
                out.at = false;
                out.tag = CaseTag::Conn4BlockInD;
                out.witness["block"] = bm.block;
                out.witness["membership"] = membership_json(bm.membership);
                return out;
            }
        }
    }

    // (5) x a cutvertex, all but at most one lobe a Gallai tree, and the
    // exceptional lobe pinned by (i)/(ii)/(iii).
    if (x_cut) {
        auto lobe_sets = lobes_of_vertex(g, x);
        std::vector<int> non_gallai;
        for (size_t i = 0; i < lobe_sets.size(); ++i) {
            auto part = induce_part(g, lobe_sets[i]);
            if (!is_gallai_tree(part.graph)) non_gallai.push_back(static_cast<int>(i));
        }
        if (non_gallai.size() <= 1) {
            // All lobes Gallai would make G itself a Gallai tree (clause 1).
            if (non_gallai.empty())
                throw Error(ErrorKind::Internal,
                            "all lobes Gallai but graph is not a Gallai tree");
            auto part = induce_part(g, lobe_sets[non_gallai.front()]);
            int ax = part.mapped(x);
            const Graph& a = part.graph;
            bool fires = false;
            std::string subcase;
            json detail;
            if (a.degree(ax) == 1) {
                fires = true;
                subcase = "i";
            } else if (a.degree(ax) == 2 && is_gallai_tree(a.removed_vertex(ax))) {
                fires = true;
                subcase = "ii";
            } else {
                auto adec = blocks(a);
                auto bm = x_block_membership(a, adec, ax);
                if (bm.applicable && bm.member) {
                    bool lobes_fine = true;
                    for (const auto& bl : lobes_of_block(a, bm.block)) {
                        auto bp = induce_part(a, bl);
                        if (!is_gallai_tree(bp.graph)) lobes_fine = false;
                    }
                    if (lobes_fine) {
                        fires = true;
                        subcase = "iii";
                        detail["block"] = bm.block;
                        detail["membership"] = membership_json(bm.membership);
                    }
                }
            }
            if (fires) {
                out.at = false;
                out.tag = CaseTag::Conn5Cutvertex;
                out.witness["lobe"] = lobe_sets[non_gallai.front()];
                out.witness["subcase"] = subcase;
                if (!detail.is_null()) out.witness["detail"] = detail;
                return out;
            }
        }
    }

    out.at = true;
    out.tag = CaseTag::ConnAt;
    return out;
}

}  // namespace atg

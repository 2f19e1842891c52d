#pragma once

// PQ-tree over columns 1..ncols with reduce-per-row processing (templates
// L1, P1-P6, Q1-Q3). Parent pointers are kept on every node and each reduce
// walks the pertinent subtree bottom-up; this trades the strict linear-time
// bubble pass for a much smaller implementation with the same contract.
//
// Invariant used throughout: a PARTIAL node is a Q node whose child list is
// ordered with its empty side first and its full side last.

#include <cassert>
#include <vector>

#include "circone/core.hpp"

namespace circone {

class PQTree {
  public:
    explicit PQTree(int ncols) {
        if (ncols < 0) throw DimensionError("negative column count");
        leaf_.assign(static_cast<size_t>(ncols) + 1, -1);
        if (ncols == 0) return;
        if (ncols == 1) {
            root_ = new_node(Leaf, 1);
            leaf_[1] = root_;
            return;
        }
        root_ = new_node(P, 0);
        for (int c = 1; c <= ncols; ++c) {
            int l = new_node(Leaf, c);
            leaf_[static_cast<size_t>(c)] = l;
            nd_[static_cast<size_t>(l)].parent = root_;
            nd_[static_cast<size_t>(root_)].ch.push_back(l);
        }
    }

    // Makes the columns in `cols` consecutive in every represented order.
    // Returns false iff impossible; the tree is then in an unusable state.
    bool reduce(const std::vector<int>& cols) {
        if (cols.size() <= 1) return true;
        ++epoch_;
        sync_scratch();

        int want = static_cast<int>(cols.size());
        // climb from every pertinent leaf, counting pertinent leaves per node
        for (int c : cols) {
            int x = leaf_.at(static_cast<size_t>(c));
            if (x < 0) throw InvalidParameter("reduce: unknown column");
            for (; x != -1; x = nd_[static_cast<size_t>(x)].parent) {
                touch(x);
                ++cnt_[static_cast<size_t>(x)];
            }
        }
        // pertinent root: lowest node on a leaf-to-root path covering all of S
        int proot = leaf_[static_cast<size_t>(cols[0])];
        while (cnt_[static_cast<size_t>(proot)] < want) proot = nd_[static_cast<size_t>(proot)].parent;

        // bottom-up order via readiness counting
        std::vector<int> stack;
        for (int c : cols) {
            int l = leaf_[static_cast<size_t>(c)];
            set_label(l, Full);
            if (l == proot) return true;
            if (bump_done(l)) stack.push_back(nd_[static_cast<size_t>(l)].parent);
        }
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (!apply_template(x, x == proot)) return false;
            if (x == proot) return true;
            if (bump_done(x)) stack.push_back(nd_[static_cast<size_t>(x)].parent);
        }
        throw Error("pqtree: pertinent root unreachable");  // structural bug guard
    }

    std::vector<int> frontier() const {
        std::vector<int> out;
        if (root_ == -1) return out;
        std::vector<int> stack{root_};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            const Node& node = nd_[static_cast<size_t>(x)];
            if (node.type == Leaf) {
                out.push_back(node.col);
                continue;
            }
            for (auto it = node.ch.rbegin(); it != node.ch.rend(); ++it) stack.push_back(*it);
        }
        return out;
    }

  private:
    enum Type { Leaf, P, Q };
    enum Label { Empty, Full, Partial };
    struct Node {
        Type type;
        int col;
        int parent = -1;
        std::vector<int> ch;
    };

    std::vector<Node> nd_;
    std::vector<int> leaf_;
    int root_ = -1;
    // per-reduce scratch, epoch-stamped
    std::vector<int> stamp_, cnt_, label_, done_, pch_;
    int epoch_ = 0;

    int new_node(Type t, int col) {
        nd_.push_back(Node{t, col, -1, {}});
        return static_cast<int>(nd_.size()) - 1;
    }
    void sync_scratch() {
        stamp_.resize(nd_.size(), 0);
        cnt_.resize(nd_.size(), 0);
        label_.resize(nd_.size(), Empty);
        done_.resize(nd_.size(), 0);
        pch_.resize(nd_.size(), 0);
    }
    void touch(int x) {
        if (stamp_[static_cast<size_t>(x)] != epoch_) {
            stamp_[static_cast<size_t>(x)] = epoch_;
            cnt_[static_cast<size_t>(x)] = 0;
            label_[static_cast<size_t>(x)] = Empty;
            done_[static_cast<size_t>(x)] = 0;
            pch_[static_cast<size_t>(x)] = 0;
        }
    }
    Label lab(int x) const {
        return stamp_[static_cast<size_t>(x)] == epoch_ ? static_cast<Label>(label_[static_cast<size_t>(x)]) : Empty;
    }
    void set_label(int x, Label l) {
        touch(x);
        label_[static_cast<size_t>(x)] = l;
    }
    // counts a finished pertinent child of x's parent; true when the parent is ready
    bool bump_done(int x) {
        int p = nd_[static_cast<size_t>(x)].parent;
        assert(p != -1);
        touch(p);
        if (pch_[static_cast<size_t>(p)] == 0) {
            for (int c : nd_[static_cast<size_t>(p)].ch)
                if (stamp_[static_cast<size_t>(c)] == epoch_ && cnt_[static_cast<size_t>(c)] > 0) ++pch_[static_cast<size_t>(p)];
        }
        return ++done_[static_cast<size_t>(p)] == pch_[static_cast<size_t>(p)];
    }

    void reparent(int child, int parent) { nd_[static_cast<size_t>(child)].parent = parent; }

    // wraps `kids` in a fresh P node unless there is just one of them
    int group(std::vector<int>&& kids, Label l) {
        assert(!kids.empty());
        if (kids.size() == 1) return kids[0];
        int g = new_node(P, 0);
        sync_scratch();
        touch(g);
        label_[static_cast<size_t>(g)] = l;
        nd_[static_cast<size_t>(g)].ch = std::move(kids);
        for (int c : nd_[static_cast<size_t>(g)].ch) reparent(c, g);
        return g;
    }

    void replace_in_parent(int x, int repl) {
        int p = nd_[static_cast<size_t>(x)].parent;
        if (p == -1) {
            root_ = repl;
            nd_[static_cast<size_t>(repl)].parent = -1;
            return;
        }
        for (int& c : nd_[static_cast<size_t>(p)].ch)
            if (c == x) c = repl;
        nd_[static_cast<size_t>(repl)].parent = p;
    }

    void contract_single_child(int x) {
        if (nd_[static_cast<size_t>(x)].ch.size() == 1) replace_in_parent(x, nd_[static_cast<size_t>(x)].ch[0]);
    }

    bool apply_template(int x, bool is_proot) {
        Node& node = nd_[static_cast<size_t>(x)];
        if (node.type == Leaf) return true;  // pertinent leaf, already labeled

        std::vector<int> empt, full, part;
        for (int c : node.ch) {
            switch (lab(c)) {
                case Empty: empt.push_back(c); break;
                case Full: full.push_back(c); break;
                case Partial: part.push_back(c); break;
            }
        }

        if (node.type == P) {
            if (part.empty() && empt.empty()) { set_label(x, Full); return true; }  // P1
            if (!is_proot) {
                if (part.size() >= 2) return false;
                std::vector<int> seq;
                if (!empt.empty()) seq.push_back(group(std::move(empt), Empty));
                if (part.size() == 1) {  // P5
                    int pc = part[0];
                    for (int c : nd_[static_cast<size_t>(pc)].ch) seq.push_back(c);
                    nd_[static_cast<size_t>(pc)].ch.clear();
                }
                if (!full.empty()) seq.push_back(group(std::move(full), Full));
                Node& nx = nd_[static_cast<size_t>(x)];  // nd_ may have reallocated
                nx.type = Q;                              // P3 / P5
                nx.ch = std::move(seq);
                for (int c : nx.ch) reparent(c, x);
                set_label(x, Partial);
                return true;
            }
            // pertinent root
            if (part.empty()) {  // P2
                if (full.size() >= 2 && !empt.empty()) {
                    auto keep = empt;
                    int g = group(std::move(full), Full);
                    keep.push_back(g);
                    Node& nx = nd_[static_cast<size_t>(x)];
                    nx.ch = std::move(keep);
                    for (int c : nx.ch) reparent(c, x);
                }
                return true;
            }
            if (part.size() == 1) {  // P4
                int pc = part[0];
                if (!full.empty()) {
                    int g = group(std::move(full), Full);
                    nd_[static_cast<size_t>(pc)].ch.push_back(g);
                    reparent(g, pc);
                }
                Node& nx = nd_[static_cast<size_t>(x)];
                nx.ch = std::move(empt);
                nx.ch.push_back(pc);
                for (int c : nx.ch) reparent(c, x);
                contract_single_child(x);
                return true;
            }
            if (part.size() == 2) {  // P6
                int pc1 = part[0], pc2 = part[1];
                std::vector<int> merged = nd_[static_cast<size_t>(pc1)].ch;
                if (!full.empty()) merged.push_back(group(std::move(full), Full));
                auto& rc = nd_[static_cast<size_t>(pc2)].ch;
                merged.insert(merged.end(), rc.rbegin(), rc.rend());
                int q = new_node(Q, 0);
                sync_scratch();
                nd_[static_cast<size_t>(q)].ch = std::move(merged);
                for (int c : nd_[static_cast<size_t>(q)].ch) reparent(c, q);
                Node& nx = nd_[static_cast<size_t>(x)];
                nx.ch = std::move(empt);
                nx.ch.push_back(q);
                reparent(q, x);
                contract_single_child(x);
                return true;
            }
            return false;
        }

        // Q node
        std::vector<int>& ch = node.ch;
        int m = static_cast<int>(ch.size());

        if (part.empty() && empt.empty()) { set_label(x, Full); return true; }  // Q1

        if (!is_proot) {
            // Q2: after orienting x, children must read  empty* [partial] full*
            auto matches_epf = [&](const std::vector<int>& order) {
                size_t i = 0, n = order.size();
                while (i < n && lab(order[i]) == Empty) ++i;
                if (i < n && lab(order[i]) == Partial) ++i;
                while (i < n && lab(order[i]) == Full) ++i;
                return i == n;
            };
            if (!matches_epf(ch)) {
                std::reverse(ch.begin(), ch.end());
                if (!matches_epf(ch)) return false;
            }
            // splice the partial child in place; its empty side already faces
            // x's empty run because partial children are stored empty-first
            for (size_t i = 0; i < ch.size(); ++i) {
                if (lab(ch[i]) != Partial) continue;
                std::vector<int> sub = nd_[static_cast<size_t>(ch[i])].ch;
                ch.erase(ch.begin() + static_cast<std::ptrdiff_t>(i));
                ch.insert(ch.begin() + static_cast<std::ptrdiff_t>(i), sub.begin(), sub.end());
                for (int c : sub) reparent(c, x);
                break;
            }
            set_label(x, Partial);
            return true;
        }

        // Q3 at the pertinent root: the non-empty children form one contiguous
        // block whose interior is all full; up to two partials at the block ends.
        int lo = 0, hi = m - 1;
        while (lo < m && lab(ch[static_cast<size_t>(lo)]) == Empty) ++lo;
        while (hi >= 0 && lab(ch[static_cast<size_t>(hi)]) == Empty) --hi;
        if (lo > hi) return false;
        for (int i = lo; i <= hi; ++i)
            if (lab(ch[static_cast<size_t>(i)]) == Empty) return false;
        for (int i = lo + 1; i < hi; ++i)
            if (lab(ch[static_cast<size_t>(i)]) == Partial) return false;
        std::vector<int> rebuilt;
        rebuilt.reserve(static_cast<size_t>(m) + 4);
        for (int i = 0; i < m; ++i) {
            int c = ch[static_cast<size_t>(i)];
            if (lab(c) != Partial) {
                rebuilt.push_back(c);
                continue;
            }
            auto sub = nd_[static_cast<size_t>(c)].ch;
            if (i == hi) std::reverse(sub.begin(), sub.end());  // right end: full side inward
            rebuilt.insert(rebuilt.end(), sub.begin(), sub.end());
        }
        Node& nx = nd_[static_cast<size_t>(x)];
        nx.ch = std::move(rebuilt);
        for (int c : nx.ch) reparent(c, x);
        return true;
    }
};

}  // namespace circone

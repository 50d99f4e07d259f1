#include "witt/exact_cover.hpp"

#include <algorithm>
#include <limits>

namespace witt {

bool ExactCoverInstance::valid() const {
    for (const auto& row : rows) {
        if (!std::is_sorted(row.begin(), row.end())) return false;
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
        if (!row.empty() && row.back() >= columns) return false;
    }
    return true;
}

namespace {

// Classic toroidal doubly-linked node structure.
struct Node {
    int left, right, up, down;
    int col;    // column header index
    int row_id; // -1 for headers
};

class Dlx {
public:
    Dlx(const ExactCoverInstance& inst, SolveMode mode, ColumnHeuristic heuristic)
        : mode_(mode), heuristic_(heuristic), ncols_((int)inst.columns) {
        // Header nodes 0..ncols-1 plus root at index ncols.
        nodes_.resize(ncols_ + 1);
        size_.assign(ncols_, 0);
        root_ = ncols_;
        for (int c = 0; c <= ncols_; ++c) {
            nodes_[c].left = (c == 0) ? root_ : c - 1;
            nodes_[c].right = (c == ncols_) ? 0 : c + 1;
            nodes_[c].up = nodes_[c].down = c;
            nodes_[c].col = c;
            nodes_[c].row_id = -1;
        }
        for (std::size_t r = 0; r < inst.rows.size(); ++r) {
            int first = -1;
            for (std::size_t c : inst.rows[r]) {
                int id = (int)nodes_.size();
                nodes_.push_back({});
                Node& n = nodes_[id];
                n.col = (int)c;
                n.row_id = (int)r;
                n.up = nodes_[(int)c].up;
                n.down = (int)c;
                nodes_[nodes_[(int)c].up].down = id;
                nodes_[(int)c].up = id;
                ++size_[c];
                if (first < 0) {
                    first = id;
                    n.left = n.right = id;
                } else {
                    n.left = nodes_[first].left;
                    n.right = first;
                    nodes_[nodes_[first].left].right = id;
                    nodes_[first].left = id;
                }
            }
        }
    }

    ExactCoverResult run() {
        search();
        return std::move(result_);
    }

private:
    void cover(int c) {
        Node& h = nodes_[c];
        nodes_[h.right].left = h.left;
        nodes_[h.left].right = h.right;
        for (int i = h.down; i != c; i = nodes_[i].down)
            for (int j = nodes_[i].right; j != i; j = nodes_[j].right) {
                nodes_[nodes_[j].down].up = nodes_[j].up;
                nodes_[nodes_[j].up].down = nodes_[j].down;
                --size_[nodes_[j].col];
            }
    }

    void uncover(int c) {
        Node& h = nodes_[c];
        for (int i = h.up; i != c; i = nodes_[i].up)
            for (int j = nodes_[i].left; j != i; j = nodes_[j].left) {
                ++size_[nodes_[j].col];
                nodes_[nodes_[j].down].up = j;
                nodes_[nodes_[j].up].down = j;
            }
        nodes_[h.right].left = c;
        nodes_[h.left].right = c;
    }

    int choose_column() const {
        if (heuristic_ == ColumnHeuristic::Leftmost) return nodes_[root_].right;
        int best = -1;
        int best_size = std::numeric_limits<int>::max();
        for (int c = nodes_[root_].right; c != root_; c = nodes_[c].right)
            if (size_[c] < best_size) {
                best_size = size_[c];
                best = c;
            }
        return best;
    }

    bool search() {
        if (nodes_[root_].right == root_) {
            ++result_.count;
            if (mode_ != SolveMode::Count) {
                std::vector<std::size_t> sol(stack_.begin(), stack_.end());
                std::sort(sol.begin(), sol.end());
                result_.solutions.push_back(std::move(sol));
            }
            return mode_ == SolveMode::First;
        }
        int c = choose_column();
        if (size_[c] == 0) return false;
        cover(c);
        // Down-links preserve insertion order, so rows are tried ascending.
        for (int i = nodes_[c].down; i != c; i = nodes_[i].down) {
            stack_.push_back((std::size_t)nodes_[i].row_id);
            for (int j = nodes_[i].right; j != i; j = nodes_[j].right)
                cover(nodes_[j].col);
            bool done = search();
            for (int j = nodes_[i].left; j != i; j = nodes_[j].left)
                uncover(nodes_[j].col);
            stack_.pop_back();
            if (done) {
                uncover(c);
                return true;
            }
        }
        uncover(c);
        return false;
    }

    SolveMode mode_;
    ColumnHeuristic heuristic_;
    int ncols_;
    int root_;
    std::vector<Node> nodes_;
    std::vector<int> size_;
    std::vector<std::size_t> stack_;
    ExactCoverResult result_;
};

} // namespace

ExactCoverResult exact_cover_solve(const ExactCoverInstance& inst, SolveMode mode,
                                   ColumnHeuristic heuristic) {
    Dlx dlx(inst, mode, heuristic);
    return dlx.run();
}

} // namespace witt

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stanley/partition.hpp"
#include "stanley/permutation.hpp"

namespace stanley {

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// A finite set of (row, col) cells, 1-based, stored sorted row-major.
/// Empty rows and columns are implicit.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<Cell> cells);

    bool contains(int row, int col) const;
    bool contains(Cell c) const { return contains(c.row, c.col); }

    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    int max_row() const;
    int max_col() const;

    const std::vector<Cell>& cells() const { return cells_; }

    /// Cells per row index (1..max_row), zeros included.
    std::vector<int> row_counts() const;
    std::vector<int> col_counts() const;

    auto operator<=>(const Diagram&) const = default;

    /// Grid of 'o'/'.' rows over the bounding box; "(empty)" for no cells.
    std::string ascii() const;

private:
    std::vector<Cell> cells_;
};

/// Row move R_{from->to} or column move C_{from->to}: cells of line `from`
/// slide into line `to` where the target position is empty; moves with
/// from == to are the identity.
struct JPMove {
    enum class Kind { Row, Col };
    Kind kind = Kind::Row;
    int from = 0;
    int to = 0;

    auto operator<=>(const JPMove&) const = default;
    std::string str() const;  // "R5->1", "C4->1"
};

JPMove row_move(int from, int to);
JPMove col_move(int from, int to);

/// {(i, w(j)) : i < j, w(i) > w(j)}; |cells| = length(w).
Diagram rothe(const Permutation& w);

/// Union/intersection semantics of the move; cell count is preserved.
Diagram apply_move(const JPMove& m, const Diagram& d);
Diagram apply_moves(std::span<const JPMove> moves, const Diagram& d);

/// Row lengths sorted decreasingly.
Partition d_min(const Diagram& d);

/// Conjugate of the column lengths sorted decreasingly.
Partition d_max(const Diagram& d);

/// Cells with no cell immediately right or below.
std::vector<Cell> essential_set(const Diagram& d);

struct Subdiagram {
    Diagram original;            // cells in the parent's coordinates
    Diagram reindexed;           // rows/cols compressed to 1..|rows|, 1..|cols|
    std::map<int, int> row_map;  // parent row -> compressed row
    std::map<int, int> col_map;  // parent col -> compressed col
};

/// (rows x cols) intersected with d. The index maps cover the full given
/// row/col sets, so empty selected lines keep their place after compression.
Subdiagram subdiagram(const Diagram& d, const std::vector<int>& rows,
                      const std::vector<int>& cols);

/// The partition whose Ferrers diagram d can be turned into by permuting
/// rows and columns, or nullopt. Criterion: the nonempty row supports must
/// be totally ordered by inclusion.
std::optional<Partition> equivalent_partition(const Diagram& d);

/// Bipartite graph on rows and columns with an edge per cell: is it acyclic?
bool graph_is_forest(const Diagram& d);

/// Complement of d inside the rows x cols rectangle. Throws invalid_input
/// if d has cells outside the rectangle.
Diagram complement_in_rectangle(const Diagram& d, int rows, int cols);

/// The permutation w with rothe(w) == d exactly, if one exists.
std::optional<Permutation> rothe_inverse(const Diagram& d);

/// Does the subdiagram of d on (rows, cols), reindexed, equal the staircase
/// (p-1,...,1) with one extra cell at (p,p)?
bool is_staircase_with_box(const Diagram& d, const std::vector<int>& rows,
                           const std::vector<int>& cols);

/// Rows and columns of D(base) carrying the staircase-with-box subdiagram
/// that the transitions of w act on. When w has no transition in its own
/// frame the computation happens for 1 x w; `shifts` records that.
struct TransitionStaircase {
    Permutation base;  // w shifted `shifts` times
    int shifts = 0;
    std::vector<int> rows;  // ascending: j_p, ..., j_2, r
    std::vector<int> cols;  // ascending: w(j_1), ..., w(j_{p-1}), w(s)
};

TransitionStaircase staircase_subdiagram_of_transitions(const Permutation& w);

}  // namespace stanley

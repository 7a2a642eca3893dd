// Bit-packed linear algebra over F2.
//
// Widths stay small (at most kMaxDegree+1 = 256 bits, one to four words), so
// rows are fixed-size word arrays.  Elimination always tracks combination
// certificates over the original rows; membership and kernel computations
// reuse them.

#pragma once

#include <optional>
#include <vector>

#include "klein/poly.hpp"

namespace klein {

inline constexpr int kMaxBitWidth = kMaxDegree + 1;

class BitVec {
public:
    explicit BitVec(int width) : width_(width) {
        if (width < 0 || width > kMaxBitWidth) throw std::out_of_range("bit vector width out of range");
    }

    static BitVec unit(int width, int i) {
        BitVec v(width);
        v.set(i);
        return v;
    }

    static BitVec of(const HomogPoly& p) {
        BitVec v(p.degree() + 1);
        v.w_ = p.words();
        return v;
    }

    HomogPoly to_poly() const { return HomogPoly::from_words(width_ - 1, w_); }

    int width() const { return width_; }
    bool is_zero() const { return detail::words_zero(w_); }
    int lowest_set() const { return detail::lowest_bit(w_); }
    int popcount() const { return detail::popcount(w_); }

    bool bit(int i) const { return i >= 0 && i < width_ && detail::get_bit(w_, i); }

    BitVec& set(int i) {
        if (i < 0 || i >= width_) throw std::out_of_range("bit index out of range");
        detail::set_bit(w_, i);
        return *this;
    }

    BitVec& operator^=(const BitVec& o) {
        if (width_ != o.width_) throw std::invalid_argument("bit vector width mismatch");
        detail::xor_words(w_, o.w_);
        return *this;
    }

    friend BitVec operator^(BitVec x, const BitVec& y) {
        x ^= y;
        return x;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    friend std::strong_ordering operator<=>(const BitVec& x, const BitVec& y) {
        if (x.width_ != y.width_) return x.width_ <=> y.width_;
        return detail::compare_words(x.w_, y.w_);
    }

private:
    int width_;
    detail::Words w_{};
};

/// Row-space oriented matrix.  `rref` brings the rows into reduced echelon
/// form with the pivot of each row at its lowest set bit; zero rows are
/// discarded but their combinations are kept as the row-relation space.
class BitMatrix {
public:
    explicit BitMatrix(int width) : width_(width) {
        if (width < 0 || width > kMaxBitWidth) throw std::out_of_range("matrix width out of range");
    }

    int width() const { return width_; }
    int original_rows() const { return original_rows_; }

    void add_row(const BitVec& row) {
        if (row.width() != width_) throw std::invalid_argument("row width mismatch");
        if (reduced_) throw std::logic_error("cannot add rows after reduction");
        if (original_rows_ >= kMaxBitWidth) throw std::out_of_range("row count exceeds certificate width");
        pending_.push_back(row);
        ++original_rows_;
    }

    void add_row(const HomogPoly& p) { add_row(BitVec::of(p)); }

    // Reduced row-echelon form; idempotent.  Pivot rows end up sorted by
    // pivot position, certificates map each kept row back to the inputs.
    void rref() {
        if (reduced_) return;
        reduced_ = true;
        for (int r = 0; r < static_cast<int>(pending_.size()); ++r) {
            BitVec row = pending_[r];
            BitVec combo = BitVec::unit(kMaxBitWidth, r);
            reduce_against_pivots(row, combo);
            if (row.is_zero()) {
                relations_.push_back(combo);
                continue;
            }
            const int pivot = row.lowest_set();
            // Clear the new pivot from every existing row to stay reduced.
            for (std::size_t k = 0; k < rows_.size(); ++k) {
                if (rows_[k].bit(pivot)) {
                    rows_[k] ^= row;
                    combos_[k] ^= combo;
                }
            }
            insert_sorted(pivot, row, combo);
        }
        pending_.clear();
    }

    int rank() const {
        require_reduced();
        return static_cast<int>(rows_.size());
    }

    const std::vector<BitVec>& rows() const {
        require_reduced();
        return rows_;
    }

    const std::vector<int>& pivots() const {
        require_reduced();
        return pivots_;
    }

    // Basis of {x : sum_i x_i row_i = 0}, certificates of the zero rows.
    const std::vector<BitVec>& row_relations() const {
        require_reduced();
        return relations_;
    }

    struct Membership {
        bool member = false;
        // Combination of original rows reproducing the queried vector
        // (indices into insertion order); width equals original_rows().
        BitVec combo{0};
    };

    Membership member(const BitVec& v) const {
        require_reduced();
        if (v.width() != width_) throw std::invalid_argument("queried vector width mismatch");
        BitVec rest = v;
        BitVec combo(kMaxBitWidth);
        for (std::size_t k = 0; k < rows_.size() && !rest.is_zero(); ++k) {
            if (rest.bit(pivots_[k])) {
                rest ^= rows_[k];
                combo ^= combos_[k];
            }
        }
        if (!rest.is_zero()) return {};
        return {true, resize_combo(combo)};
    }

    bool contains_row(const BitVec& v) const { return member(v).member; }

    bool same_row_space(const BitMatrix& o) const {
        require_reduced();
        o.require_reduced();
        return width_ == o.width_ && rows_ == o.rows_;
    }

    /// Kernel of the linear map sending basis vector i to row i (the matrix
    /// must list one image per domain basis vector).  Returns a reduced
    /// basis of the kernel as a matrix of coefficient vectors.
    static BitMatrix kernel_of(BitMatrix images) {
        images.rref();
        BitMatrix kernel(images.original_rows());
        for (const BitVec& rel : images.row_relations()) kernel.add_row(resize(rel, images.original_rows()));
        kernel.rref();
        return kernel;
    }

private:
    void require_reduced() const {
        if (!reduced_) throw std::logic_error("matrix not reduced; call rref() first");
    }

    void reduce_against_pivots(BitVec& row, BitVec& combo) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (row.bit(pivots_[k])) {
                row ^= rows_[k];
                combo ^= combos_[k];
            }
        }
    }

    void insert_sorted(int pivot, const BitVec& row, const BitVec& combo) {
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < pivot) ++at;
        pivots_.insert(pivots_.begin() + at, pivot);
        rows_.insert(rows_.begin() + at, row);
        combos_.insert(combos_.begin() + at, combo);
    }

    BitVec resize_combo(const BitVec& combo) const { return resize(combo, original_rows_); }

    static BitVec resize(const BitVec& v, int width) {
        BitVec r(width);
        for (int i = 0; i < width; ++i)
            if (v.bit(i)) r.set(i);
        return r;
    }

    int width_;
    bool reduced_ = false;
    int original_rows_ = 0;
    std::vector<BitVec> pending_;
    std::vector<BitVec> rows_;
    std::vector<BitVec> combos_;
    std::vector<int> pivots_;
    std::vector<BitVec> relations_;
};

/// Solves a linear system given as augmented rows (coefficients | rhs bit).
/// Returns a particular solution and a basis of the homogeneous solutions,
/// or nullopt when inconsistent.  `variables` is the coefficient width.
struct LinearSolution {
    BitVec particular;
    std::vector<BitVec> homogeneous_basis;
};

inline std::optional<LinearSolution> solve_augmented(int variables, const std::vector<BitVec>& rows) {
    BitMatrix m(variables + 1);
    for (const auto& r : rows) m.add_row(r);
    m.rref();
    BitVec particular(variables);
    std::vector<bool> is_pivot(static_cast<std::size_t>(variables), false);
    for (std::size_t k = 0; k < m.rows().size(); ++k) {
        const int p = m.pivots()[k];
        if (p == variables) return std::nullopt;  // row (0..0 | 1): inconsistent
        is_pivot[static_cast<std::size_t>(p)] = true;
        if (m.rows()[k].bit(variables)) particular.set(p);
    }
    LinearSolution s{particular, {}};
    for (int f = 0; f < variables; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        BitVec dir = BitVec::unit(variables, f);
        // Back-substitute the free variable through the pivot rows.
        for (std::size_t k = 0; k < m.rows().size(); ++k)
            if (m.pivots()[k] < variables && m.rows()[k].bit(f)) dir.set(m.pivots()[k]);
        s.homogeneous_basis.push_back(dir);
    }
    return s;
}

}  // namespace klein

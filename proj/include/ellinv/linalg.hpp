#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ellinv/field.hpp"

namespace ellinv {

// Dense matrix over F_q.  Row-major; only the exact operations the solvers
// need.  Pivoting is first-nonzero so results are deterministic.
class Mat {
  public:
    Mat() : F_(nullptr), rows_(0), cols_(0) {}
    Mat(const FieldCtx& F, size_t rows, size_t cols)
        : F_(&F), rows_(rows), cols_(cols), a_(rows * cols, Fq::zero(F)) {}

    static Mat identity(const FieldCtx& F, size_t n) {
        Mat m(F, n, n);
        for (size_t i = 0; i < n; i++) m.at(i, i) = Fq::one(F);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldCtx& ctx() const { return *F_; }

    Fq& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Fq& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Mat mul(const Mat& b) const {
        Mat r(*F_, rows_, b.cols_);
        for (size_t i = 0; i < rows_; i++)
            for (size_t k = 0; k < cols_; k++) {
                const Fq& v = at(i, k);
                if (v.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; j++) r.at(i, j) += v * b.at(k, j);
            }
        return r;
    }

    // Reduced row echelon form in place; returns pivot column list.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; c++) {
            size_t sel = r;
            while (sel < rows_ && at(sel, c).is_zero()) sel++;
            if (sel == rows_) continue;
            if (sel != r)
                for (size_t j = 0; j < cols_; j++) std::swap(at(sel, j), at(r, j));
            Fq inv = at(r, c).inv();
            for (size_t j = c; j < cols_; j++) at(r, j) *= inv;
            for (size_t i = 0; i < rows_; i++) {
                if (i == r || at(i, c).is_zero()) continue;
                Fq f = at(i, c);
                for (size_t j = c; j < cols_; j++) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            r++;
        }
        return pivots;
    }

    size_t rank() const {
        Mat tmp = *this;
        return tmp.rref().size();
    }

    // Basis of the right nullspace, one vector per column of the result.
    std::vector<std::vector<Fq>> nullspace() const {
        Mat tmp = *this;
        std::vector<size_t> piv = tmp.rref();
        std::vector<bool> is_piv(cols_, false);
        for (size_t c : piv) is_piv[c] = true;
        std::vector<std::vector<Fq>> basis;
        for (size_t c = 0; c < cols_; c++) {
            if (is_piv[c]) continue;
            std::vector<Fq> v(cols_, Fq::zero(*F_));
            v[c] = Fq::one(*F_);
            for (size_t i = 0; i < piv.size(); i++) v[piv[i]] = -tmp.at(i, c);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Fq det() const {
        Mat tmp = *this;
        Fq d = Fq::one(*F_);
        size_t n = rows_;
        for (size_t c = 0; c < n; c++) {
            size_t sel = c;
            while (sel < n && tmp.at(sel, c).is_zero()) sel++;
            if (sel == n) return Fq::zero(*F_);
            if (sel != c) {
                for (size_t j = 0; j < n; j++) std::swap(tmp.at(sel, j), tmp.at(c, j));
                d = -d;
            }
            d *= tmp.at(c, c);
            Fq inv = tmp.at(c, c).inv();
            for (size_t i = c + 1; i < n; i++) {
                if (tmp.at(i, c).is_zero()) continue;
                Fq f = tmp.at(i, c) * inv;
                for (size_t j = c; j < n; j++) tmp.at(i, j) -= f * tmp.at(c, j);
            }
        }
        return d;
    }

    Mat inverse() const {
        Mat aug(*F_, rows_, 2 * cols_);
        for (size_t i = 0; i < rows_; i++) {
            for (size_t j = 0; j < cols_; j++) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = Fq::one(*F_);
        }
        auto piv = aug.rref();
        if (piv.size() != rows_) fail(errc::invalid_input, "matrix not invertible");
        Mat r(*F_, rows_, cols_);
        for (size_t i = 0; i < rows_; i++)
            for (size_t j = 0; j < cols_; j++) r.at(i, j) = aug.at(i, cols_ + j);
        return r;
    }

  private:
    const FieldCtx* F_;
    size_t rows_, cols_;
    std::vector<Fq> a_;
};

// Incremental row-space tracker: feed rows, query rank; kept in echelon form.
class RowSpace {
  public:
    explicit RowSpace(const FieldCtx& F, size_t cols) : F_(&F), cols_(cols) {}

    // Returns true if the row increased the rank.
    bool add_row(std::vector<Fq> row) {
        for (auto& [c, r] : rows_) {
            if (!row[c].is_zero()) {
                Fq f = row[c];
                for (size_t j = 0; j < cols_; j++) row[j] -= f * r[j];
            }
        }
        size_t lead = cols_;
        for (size_t j = 0; j < cols_; j++)
            if (!row[j].is_zero()) { lead = j; break; }
        if (lead == cols_) return false;
        Fq inv = row[lead].inv();
        for (size_t j = 0; j < cols_; j++) row[j] *= inv;
        for (auto& [c, r] : rows_) {
            if (!r[lead].is_zero()) {
                Fq f = r[lead];
                for (size_t j = 0; j < cols_; j++) r[j] -= f * row[j];
            }
        }
        rows_.emplace_back(lead, std::move(row));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
    }

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    // Nullspace of the accumulated rows (coefficient vectors annihilated by
    // every row).
    std::vector<std::vector<Fq>> nullspace() const {
        Mat m(*F_, rows_.size(), cols_);
        for (size_t i = 0; i < rows_.size(); i++)
            for (size_t j = 0; j < cols_; j++) m.at(i, j) = rows_[i].second[j];
        if (rows_.empty()) {
            std::vector<std::vector<Fq>> basis;
            for (size_t c = 0; c < cols_; c++) {
                std::vector<Fq> v(cols_, Fq::zero(*F_));
                v[c] = Fq::one(*F_);
                basis.push_back(std::move(v));
            }
            return basis;
        }
        return m.nullspace();
    }

  private:
    const FieldCtx* F_;
    size_t cols_;
    std::vector<std::pair<size_t, std::vector<Fq>>> rows_;
};

} // namespace ellinv

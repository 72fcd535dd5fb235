#include "parcoh/matrix.hpp"

#include <sstream>

namespace parcoh {

Vec vec_zero(Field f, int n) { return Vec(n, Scalar::zero(f)); }

Vec vec_unit(Field f, int n, int i) {
    Vec v = vec_zero(f, n);
    v[i] = Scalar::one(f);
    return v;
}

static void check_dims(std::size_t a, std::size_t b) {
    if (a != b) throw std::logic_error("vector length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

Vec vec_add(const Vec& a, const Vec& b) {
    check_dims(a.size(), b.size());
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check_dims(a.size(), b.size());
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a);
    for (auto& x : r) x = -x;
    return r;
}

Vec vec_mul(const Vec& a, const Vec& b) {
    check_dims(a.size(), b.size());
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= b[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

void vec_acc(Vec& a, const Scalar& c, const Vec& b) {
    check_dims(a.size(), b.size());
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += c * b[i];
}

Matrix::Matrix(Field f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows, int cols) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        check_dims(rows[r].size(), cols);
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix sum shape mismatch");
    Matrix r(*this);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix difference shape mismatch");
    Matrix r(*this);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    check_dims(v.size(), cols_);
    Vec r = vec_zero(field_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).to_string();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

/* Gauss–Jordan on a row list; shared by rref/Subspace/RowReducer. */
static void eliminate(std::vector<Vec>& rows, std::vector<int>& pivots, Field f, int cols) {
    pivots.clear();
    std::size_t next = 0;
    for (int col = 0; col < cols && next < rows.size(); ++col) {
        std::size_t pr = next;
        while (pr < rows.size() && rows[pr][col].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[next], rows[pr]);
        Scalar inv = rows[next][col].inverse();
        for (auto& x : rows[next]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][col].is_zero()) continue;
            Scalar c = rows[r][col];
            for (int j = 0; j < cols; ++j)
                if (!rows[next][j].is_zero()) rows[r][j] -= c * rows[next][j];
        }
        pivots.push_back(col);
        ++next;
    }
    rows.resize(next, vec_zero(f, cols));
}

Echelon rref(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Vec row(m.cols(), Scalar::zero(m.field()));
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        rows.push_back(std::move(row));
    }
    Echelon e;
    eliminate(rows, e.pivots, m.field(), m.cols());
    e.rows = std::move(rows);
    return e;
}

Subspace Subspace::span(Field f, int ambient, const std::vector<Vec>& vectors) {
    Subspace s(f, ambient);
    std::vector<Vec> rows;
    for (const auto& v : vectors) {
        check_dims(v.size(), ambient);
        if (!vec_is_zero(v)) rows.push_back(v);
    }
    eliminate(rows, s.pivots_, f, ambient);
    s.basis_ = std::move(rows);
    return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    check_dims(v.size(), ambient_);
    Vec residual = v;
    Vec coords = vec_zero(field_, dim());
    for (int i = 0; i < dim(); ++i) {
        Scalar c = residual[pivots_[i]]; /* basis pivot entries are 1 */
        if (c.is_zero()) continue;
        coords[i] = c;
        vec_acc(residual, -c, basis_[i]);
    }
    if (!vec_is_zero(residual)) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

Vec Subspace::from_coordinates(const Vec& coords) const {
    check_dims(coords.size(), dim());
    Vec v = vec_zero(field_, ambient_);
    for (int i = 0; i < dim(); ++i) vec_acc(v, coords[i], basis_[i]);
    return v;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_ || field_ != o.field_) throw std::logic_error("subspace sum shape mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, ambient_, all);
}

bool Subspace::contains_subspace(const Subspace& o) const {
    for (const auto& v : o.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && field_ == o.field_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v = vec_zero(m.field(), m.cols());
        v[j] = Scalar::one(m.field());
        for (int i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rows[i][j];
        basis.push_back(std::move(v));
    }
    if (e.rank() + static_cast<int>(basis.size()) != m.cols())
        throw std::logic_error("rank-nullity violated in kernel computation");
    return Subspace::span(m.field(), m.cols(), basis);
}

Subspace image(const Matrix& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        Vec v = vec_zero(m.field(), m.rows());
        for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
        cols.push_back(std::move(v));
    }
    Subspace s = Subspace::span(m.field(), m.rows(), cols);
    if (s.dim() + kernel(m).dim() != m.cols())
        throw std::logic_error("rank-nullity violated in image computation");
    return s;
}

int quotient_dim(const Subspace& big, const Subspace& small) {
    if (!big.contains_subspace(small))
        throw std::logic_error("quotient of non-nested subspaces: broken complex");
    return big.dim() - small.dim();
}

Solver::Solver(const Matrix& a) : field_(a.field()), rows_(a.rows()), cols_(a.cols()) {
    /* eliminate [A | I] so transform_ records the row operations */
    std::vector<Vec> aug;
    aug.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        Vec row = vec_zero(field_, cols_ + rows_);
        for (int j = 0; j < cols_; ++j) row[j] = a.at(i, j);
        row[cols_ + i] = Scalar::one(field_);
        aug.push_back(std::move(row));
    }
    /* cannot reuse eliminate(): it would pivot inside the identity part too */
    std::size_t next = 0;
    for (int col = 0; col < cols_ && next < aug.size(); ++col) {
        std::size_t pr = next;
        while (pr < aug.size() && aug[pr][col].is_zero()) ++pr;
        if (pr == aug.size()) continue;
        std::swap(aug[next], aug[pr]);
        Scalar inv = aug[next][col].inverse();
        for (auto& x : aug[next]) x *= inv;
        for (std::size_t r = 0; r < aug.size(); ++r) {
            if (r == next || aug[r][col].is_zero()) continue;
            Scalar c = aug[r][col];
            for (int j = 0; j < cols_ + rows_; ++j)
                if (!aug[next][j].is_zero()) aug[r][j] -= c * aug[next][j];
        }
        pivots_.push_back(col);
        ++next;
    }
    rank_ = static_cast<int>(next);
    for (int i = 0; i < rows_; ++i) {
        reduced_.push_back(Vec(aug[i].begin(), aug[i].begin() + cols_));
        transform_.push_back(Vec(aug[i].begin() + cols_, aug[i].end()));
    }
}

std::optional<Vec> Solver::solve(const Vec& b) const {
    check_dims(b.size(), rows_);
    Vec x = vec_zero(field_, cols_);
    for (int i = 0; i < rows_; ++i) {
        Scalar c = Scalar::zero(field_);
        for (int j = 0; j < rows_; ++j)
            if (!transform_[i][j].is_zero() && !b[j].is_zero()) c += transform_[i][j] * b[j];
        if (i < rank_) {
            x[pivots_[i]] = c;
        } else if (!c.is_zero()) {
            return std::nullopt; /* inconsistent */
        }
    }
    return x;
}

void RowReducer::add_row(Vec row) {
    check_dims(row.size(), cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar c = row[pivots_[i]];
        if (!c.is_zero()) vec_acc(row, -c, rows_[i]);
    }
    int lead = -1;
    for (int j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) { lead = j; break; }
    if (lead < 0) return;
    Scalar inv = row[lead].inverse();
    for (auto& x : row) x *= inv;
    /* clear the new pivot column upward, then insert keeping staircase order */
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar c = rows_[i][lead];
        if (!c.is_zero()) vec_acc(rows_[i], -c, row);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivots_.insert(pivots_.begin() + pos, lead);
}

void RowReducer::add_sparse_row(const std::vector<std::pair<int, Scalar>>& entries) {
    Vec row = vec_zero(field_, cols_);
    for (const auto& [j, v] : entries) row[j] += v;
    add_row(std::move(row));
}

Subspace RowReducer::kernel_space() const {
    return kernel(Matrix::from_rows(field_, rows_, cols_));
}

} // namespace parcoh

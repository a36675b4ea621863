#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cartan {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Entries supplied at construction must be
// finite; arithmetic results are not re-validated.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix diagonal(const std::vector<cplx>& d);
    static ComplexMatrix scalar(cplx value) { return {1, 1, {value}}; }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    cplx* data() noexcept { return data_.data(); }
    const cplx* data() const noexcept { return data_.data(); }
    const std::vector<cplx>& entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
    void set_block(std::size_t i0, std::size_t j0, const ComplexMatrix& b);

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
// Same product through the scalar kernel: bit-identical on every SIMD level.
ComplexMatrix reference_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);
// Max-abs entry of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace cartan

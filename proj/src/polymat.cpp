#include "ffrt/polymat.hpp"

#include <algorithm>

#include "ffrt/errors.hpp"

namespace ffrt {

SparsePolyMat::SparsePolyMat(RingPtr ring, std::size_t n) : ring_(std::move(ring)), cols_(n) {}

std::size_t SparsePolyMat::entry_count() const {
    std::size_t total = 0;
    for (const Column& c : cols_) total += c.size();
    return total;
}

namespace {
SparsePolyMat::Column::iterator find_row(SparsePolyMat::Column& col, std::uint32_t row) {
    return std::lower_bound(col.begin(), col.end(), row,
                            [](const SparsePolyMat::Entry& e, std::uint32_t r) { return e.first < r; });
}
} // namespace

void SparsePolyMat::add_entry(std::size_t row, std::size_t col, const Poly& value) {
    if (value.is_zero()) return;
    Column& c = cols_.at(col);
    auto it = find_row(c, static_cast<std::uint32_t>(row));
    if (it != c.end() && it->first == row) {
        it->second = it->second + value;
        if (it->second.is_zero()) c.erase(it);
    } else {
        c.insert(it, Entry{static_cast<std::uint32_t>(row), value});
    }
}

void SparsePolyMat::set_entry(std::size_t row, std::size_t col, Poly value) {
    Column& c = cols_.at(col);
    auto it = find_row(c, static_cast<std::uint32_t>(row));
    if (it != c.end() && it->first == row) {
        if (value.is_zero()) {
            c.erase(it);
        } else {
            it->second = std::move(value);
        }
    } else if (!value.is_zero()) {
        c.insert(it, Entry{static_cast<std::uint32_t>(row), std::move(value)});
    }
}

Poly SparsePolyMat::entry(std::size_t row, std::size_t col) const {
    const Column& c = cols_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), static_cast<std::uint32_t>(row),
                               [](const Entry& e, std::uint32_t r) { return e.first < r; });
    if (it != c.end() && it->first == row) return it->second;
    return Poly::zero(ring_);
}

SparsePolyMat SparsePolyMat::operator*(const SparsePolyMat& other) const {
    if (size() != other.size()) throw domain_error("matrix size mismatch");
    if (!ring_->compatible(*other.ring_)) throw domain_error("ambient mismatch in matrix product");
    SparsePolyMat out(ring_, size());
    for (std::size_t j = 0; j < size(); ++j) {
        std::map<std::uint32_t, Poly> acc;
        for (const auto& [k, b] : other.cols_[j]) {
            for (const auto& [i, a] : cols_[k]) {
                Poly prod = a * b;
                if (prod.is_zero()) continue;
                auto it = acc.find(i);
                if (it == acc.end()) {
                    acc.emplace(i, std::move(prod));
                } else {
                    it->second = it->second + prod;
                }
            }
        }
        Column& col = out.cols_[j];
        col.reserve(acc.size());
        for (auto& [i, v] : acc) {
            if (!v.is_zero()) col.push_back(Entry{i, std::move(v)});
        }
    }
    return out;
}

SparsePolyMat SparsePolyMat::operator+(const SparsePolyMat& other) const {
    if (size() != other.size()) throw domain_error("matrix size mismatch");
    if (!ring_->compatible(*other.ring_)) throw domain_error("ambient mismatch in matrix sum");
    SparsePolyMat out(ring_, size());
    for (std::size_t j = 0; j < size(); ++j) {
        const Column& a = cols_[j];
        const Column& b = other.cols_[j];
        Column& c = out.cols_[j];
        std::size_t i = 0, k = 0;
        while (i < a.size() || k < b.size()) {
            if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
                c.push_back(a[i++]);
            } else if (i == a.size() || b[k].first < a[i].first) {
                c.push_back(b[k++]);
            } else {
                Poly sum = a[i].second + b[k].second;
                if (!sum.is_zero()) c.push_back(Entry{a[i].first, std::move(sum)});
                ++i;
                ++k;
            }
        }
    }
    return out;
}

bool SparsePolyMat::operator==(const SparsePolyMat& other) const {
    if (size() != other.size()) return false;
    if (!ring_->compatible(*other.ring_)) return false;
    for (std::size_t j = 0; j < size(); ++j) {
        const Column& a = cols_[j];
        const Column& b = other.cols_[j];
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
        }
    }
    return true;
}

SparsePolyMat SparsePolyMat::diagonal(const RingPtr& ring, std::size_t n, const Poly& value) {
    SparsePolyMat out(ring, n);
    if (!value.is_zero()) {
        for (std::size_t i = 0; i < n; ++i) out.cols_[i].push_back(Entry{static_cast<std::uint32_t>(i), value});
    }
    return out;
}

SparsePolyMat SparsePolyMat::identity(const RingPtr& ring, std::size_t n) {
    return diagonal(ring, n, Poly::constant(ring, 1));
}

bool SparsePolyMat::is_scalar(const Poly& value) const {
    for (std::size_t j = 0; j < size(); ++j) {
        const Column& c = cols_[j];
        if (value.is_zero()) {
            if (!c.empty()) return false;
        } else {
            if (c.size() != 1 || c[0].first != j || !(c[0].second == value)) return false;
        }
    }
    return true;
}

SparsePolyMat SparsePolyMat::converted(const RingPtr& target) const {
    SparsePolyMat out(target, size());
    for (std::size_t j = 0; j < size(); ++j) {
        for (const auto& [i, v] : cols_[j]) {
            Poly w = v.converted(target);
            if (!w.is_zero()) out.cols_[j].push_back(Entry{i, std::move(w)});
        }
    }
    return out;
}

SparsePolyMat SparsePolyMat::lifted(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
    SparsePolyMat out(target, size());
    for (std::size_t j = 0; j < size(); ++j) {
        out.cols_[j].reserve(cols_[j].size());
        for (const auto& [i, v] : cols_[j]) {
            out.cols_[j].push_back(Entry{i, v.lifted(target, var_map)});
        }
    }
    return out;
}

SparsePolyMat SparsePolyMat::scaled(const Poly& factor) const {
    SparsePolyMat out(ring_, size());
    for (std::size_t j = 0; j < size(); ++j) {
        for (const auto& [i, v] : cols_[j]) {
            Poly w = v * factor;
            if (!w.is_zero()) out.cols_[j].push_back(Entry{i, std::move(w)});
        }
    }
    return out;
}

SparsePolyMat SparsePolyMat::block_diagonal(const SparsePolyMat& block, std::size_t copies) {
    std::size_t n = block.size();
    SparsePolyMat out(block.ring(), n * copies);
    for (std::size_t c = 0; c < copies; ++c) {
        std::size_t off = c * n;
        for (std::size_t j = 0; j < n; ++j) {
            Column& col = out.cols_[off + j];
            col.reserve(block.cols_[j].size());
            for (const auto& [i, v] : block.cols_[j]) {
                col.push_back(Entry{static_cast<std::uint32_t>(off + i), v});
            }
        }
    }
    return out;
}

void SparsePolyMat::for_each_entry(const std::function<void(std::size_t, std::size_t, const Poly&)>& fn) const {
    for (std::size_t j = 0; j < size(); ++j) {
        for (const auto& [i, v] : cols_[j]) fn(i, j, v);
    }
}

} // namespace ffrt

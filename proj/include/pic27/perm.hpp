#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pic27 {

/**
 * Perm: permutation of {0, ..., n-1}, stored as its image sequence.
 * Composition is (f * g)(x) = f(g(x)).
 */
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (auto v : img_) {
            if (v >= img_.size() || seen[v])
                throw std::invalid_argument("Perm: images are not a bijection");
            seen[v] = true;
        }
    }

    static Perm identity(int n) {
        std::vector<std::uint8_t> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Perm(std::move(img));
    }

    // Cycles given 0-based; points not mentioned are fixed.
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        std::vector<std::uint8_t> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (const auto& cyc : cycles)
            for (std::size_t i = 0; i < cyc.size(); ++i)
                img[cyc[i]] = static_cast<std::uint8_t>(cyc[(i + 1) % cyc.size()]);
        return Perm(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<std::uint8_t>& images() const { return img_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // (f * g)(x) = f(g(x))
    Perm operator*(const Perm& g) const {
        if (degree() != g.degree()) throw std::invalid_argument("Perm: degree mismatch");
        std::vector<std::uint8_t> img(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) img[i] = img_[g.img_[i]];
        Perm p;
        p.img_ = std::move(img); // already a bijection, skip validation
        return p;
    }

    Perm inverse() const {
        std::vector<std::uint8_t> img(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<std::uint8_t>(i);
        Perm p;
        p.img_ = std::move(img);
        return p;
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t s = 0; s < img_.size(); ++s) {
            if (seen[s]) continue;
            std::vector<int> cyc;
            int x = static_cast<int>(s);
            while (!seen[x]) {
                seen[x] = true;
                cyc.push_back(x);
                x = img_[x];
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    long order() const {
        long result = 1;
        for (const auto& cyc : cycles())
            result = std::lcm(result, static_cast<long>(cyc.size()));
        return result;
    }

    std::string cycle_string() const {
        std::string s;
        for (const auto& cyc : cycles()) {
            if (cyc.size() < 2) continue;
            s += "(";
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (i) s += " ";
                s += std::to_string(cyc[i]);
            }
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<std::uint8_t> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ULL; // FNV-1a
        for (auto v : p.images()) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

} // namespace pic27

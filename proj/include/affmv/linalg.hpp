// Small dense vectors over Rat for coweight-lattice computations.
// Vectors live in Y (coordinates in the fixed basis of the root datum),
// forms live in the dual and act by the coordinate pairing.
#pragma once

#include "affmv/rational.hpp"

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

namespace affmv {

struct Vec {
    std::vector<Rat> c;

    Vec() = default;
    explicit Vec(size_t n) : c(n, Rat(0)) {}
    Vec(std::initializer_list<Rat> init) : c(init) {}

    size_t dim() const { return c.size(); }
    Rat& operator[](size_t i) { return c[i]; }
    const Rat& operator[](size_t i) const { return c[i]; }

    bool operator==(const Vec& o) const { return c == o.c; }
    bool operator!=(const Vec& o) const { return c != o.c; }
    bool operator<(const Vec& o) const { return c < o.c; }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }

    Vec& operator+=(const Vec& o) {
        assert(dim() == o.dim());
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        assert(dim() == o.dim());
        for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(const Rat& s) {
        for (auto& x : c) x *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Rat& s, Vec a) { return a *= s; }
    friend Vec operator-(Vec a) {
        for (auto& x : a.c) x = -x;
        return a;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += rat_to_string(c[i]);
        }
        return s + ")";
    }
};

// Linear form on Y, stored by its coefficients on the fixed basis.
struct Form {
    std::vector<Rat> c;

    Form() = default;
    explicit Form(size_t n) : c(n, Rat(0)) {}
    Form(std::initializer_list<Rat> init) : c(init) {}

    size_t dim() const { return c.size(); }

    bool operator==(const Form& o) const { return c == o.c; }
    bool operator!=(const Form& o) const { return c != o.c; }

    Rat operator()(const Vec& v) const {
        assert(dim() == v.dim());
        Rat s = 0;
        for (size_t i = 0; i < c.size(); ++i) s += c[i] * v.c[i];
        return s;
    }

    Form& operator+=(const Form& o) {
        assert(dim() == o.dim());
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Form& operator-=(const Form& o) {
        assert(dim() == o.dim());
        for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    Form& operator*=(const Rat& s) {
        for (auto& x : c) x *= s;
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Rat& s, Form a) { return a *= s; }
    friend Form operator-(Form a) {
        for (auto& x : a.c) x = -x;
        return a;
    }
};

}  // namespace affmv

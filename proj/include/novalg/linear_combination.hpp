#ifndef NOVALG_LINEAR_COMBINATION_HPP
#define NOVALG_LINEAR_COMBINATION_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include <novalg/arith.hpp>

namespace novalg
{

// Finite formal sum of basis keys with nonzero rational coefficients.
// Keys must be totally ordered; iteration follows that order.
template <typename Key, typename Compare = std::less<Key>>
class linear_combination
{
public:
    using key_type = Key;
    using map_type = std::map<Key, rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    linear_combination() = default;

    explicit linear_combination(Key k, rational c = 1)
    {
        add(std::move(k), c);
    }

    static linear_combination zero()
    {
        return {};
    }

    void add(const Key &k, const rational &c)
    {
        if (c == 0) {
            return;
        }
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }

    [[nodiscard]] rational coefficient(const Key &k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? rational(0) : it->second;
    }

    [[nodiscard]] const map_type &terms() const noexcept
    {
        return terms_;
    }
    [[nodiscard]] std::size_t size() const noexcept
    {
        return terms_.size();
    }
    [[nodiscard]] bool empty() const noexcept
    {
        return terms_.empty();
    }
    [[nodiscard]] const_iterator begin() const noexcept
    {
        return terms_.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept
    {
        return terms_.end();
    }

    linear_combination &operator+=(const linear_combination &o)
    {
        for (const auto &[k, c] : o.terms_) {
            add(k, c);
        }
        return *this;
    }
    linear_combination &operator-=(const linear_combination &o)
    {
        for (const auto &[k, c] : o.terms_) {
            add(k, -c);
        }
        return *this;
    }
    linear_combination &operator*=(const rational &s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &kv : terms_) {
            kv.second *= s;
        }
        return *this;
    }

    // Add s * o without materializing the scaled copy.
    void add_scaled(const linear_combination &o, const rational &s)
    {
        if (s == 0) {
            return;
        }
        for (const auto &[k, c] : o.terms_) {
            add(k, c * s);
        }
    }

    // Keep only the terms satisfying pred(key).
    template <typename Pred>
    [[nodiscard]] linear_combination filter(Pred &&pred) const
    {
        linear_combination r;
        for (const auto &[k, c] : terms_) {
            if (pred(k)) {
                r.terms_.emplace_hint(r.terms_.end(), k, c);
            }
        }
        return r;
    }

    // Linear extension of f : Key -> linear_combination<K2>.
    template <typename Result, typename F>
    [[nodiscard]] Result map_linear(F &&f) const
    {
        Result r;
        for (const auto &[k, c] : terms_) {
            r.add_scaled(f(k), c);
        }
        return r;
    }

    friend linear_combination operator+(linear_combination a, const linear_combination &b)
    {
        a += b;
        return a;
    }
    friend linear_combination operator-(linear_combination a, const linear_combination &b)
    {
        a -= b;
        return a;
    }
    friend linear_combination operator-(linear_combination a)
    {
        a *= rational(-1);
        return a;
    }
    friend linear_combination operator*(const rational &s, linear_combination a)
    {
        a *= s;
        return a;
    }
    friend linear_combination operator*(linear_combination a, const rational &s)
    {
        a *= s;
        return a;
    }
    friend bool operator==(const linear_combination &a, const linear_combination &b)
    {
        return a.terms_ == b.terms_;
    }

private:
    map_type terms_;
};

// Bilinear extension of a product on keys.
template <typename Result, typename LA, typename LB, typename F>
Result bilinear(const LA &a, const LB &b, F &&f)
{
    Result r;
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            r.add_scaled(f(ka, kb), ca * cb);
        }
    }
    return r;
}

} // namespace novalg

#endif

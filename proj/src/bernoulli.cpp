#include "wk/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace wk {

namespace {

std::mutex table_mutex;

std::vector<Integer>& factorial_table()
{
    static std::vector<Integer> table{Integer(1)};
    return table;
}

std::vector<Rational>& bernoulli_table()
{
    static std::vector<Rational> table{Rational(1)};
    return table;
}

void require_genus_at_least_two(int g, const char* what)
{
    if (g < 2)
        throw std::domain_error(std::string(what) + ": genus must be at least 2");
}

}  // namespace

Integer factorial(int n)
{
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    std::lock_guard lock(table_mutex);
    auto& table = factorial_table();
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    return table[static_cast<std::size_t>(n)];
}

Integer binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational bernoulli(int k)
{
    if (k < 0)
        throw std::domain_error("bernoulli: negative index");
    {
        std::lock_guard lock(table_mutex);
        auto& table = bernoulli_table();
        if (static_cast<int>(table.size()) > k)
            return table[static_cast<std::size_t>(k)];
    }
    // Extend outside the lock; binomial() does not touch the tables.
    std::vector<Rational> local;
    {
        std::lock_guard lock(table_mutex);
        local = bernoulli_table();
    }
    for (int n = static_cast<int>(local.size()); n <= k; ++n) {
        // C(n+1, n) b_n = -sum_{i<n} C(n+1, i) b_i
        Rational acc(0);
        for (int i = 0; i < n; ++i)
            if (!local[static_cast<std::size_t>(i)].is_zero())
                acc += Rational(binomial(n + 1, i)) * local[static_cast<std::size_t>(i)];
        local.push_back(-acc / Rational(n + 1));
    }
    std::lock_guard lock(table_mutex);
    auto& table = bernoulli_table();
    if (table.size() < local.size())
        table = local;
    return table[static_cast<std::size_t>(k)];
}

Rational lemma2_target(int g)
{
    require_genus_at_least_two(g, "lemma2_target");
    return bernoulli(2 * g).abs() * Rational(factorial(g - 1)) / (Rational(2).pow(g) * Rational(factorial(2 * g)));
}

Rational eq3_target(int g)
{
    require_genus_at_least_two(g, "eq3_target");
    return Rational(factorial(g)) / (Rational(2).pow(g - 1) * Rational(factorial(2 * g)));
}

Rational lemma2_bridge_factor(int g)
{
    require_genus_at_least_two(g, "lemma2_bridge_factor");
    return bernoulli(2 * g).abs() / Rational(2 * g);
}

}  // namespace wk

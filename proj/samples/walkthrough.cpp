#include <iostream>

#include <novalg/diffop.hpp>
#include <novalg/enveloping.hpp>
#include <novalg/explogflow.hpp>
#include <novalg/novikov.hpp>

// A short tour: exp and log of x, a flow polynomial, the half-time flow, and
// the normal form of a composition of first-order operators.
int main()
{
    using namespace novalg;
    using combinatorics::partition;
    const int cap = 4;

    explogflow::flow_session s;
    std::cout << "exp(x) to degree " << cap << ":\n";
    for (const auto &[p, c] : explogflow::exp_coefficients_closed(cap)) {
        std::cout << "  x_" << p.to_string() << "  " << to_string(c) << "\n";
    }
    std::cout << "log(x) to degree " << cap << ":\n";
    for (const auto &[p, c] : explogflow::log_coefficients(cap, s)) {
        std::cout << "  x_" << p.to_string() << "  " << to_string(c) << "\n";
    }

    const partition p{2, 1};
    auto q = s.flow(p);
    std::cout << "Q_" << p.to_string() << "(t) = " << q.to_string() << "\n";
    std::cout << "  values at t = 0..4:";
    for (long t = 0; t <= 4; ++t) {
        std::cout << " " << q(t).get_str();
    }
    std::cout << "\n";

    // The time-1/2 flow composed with itself gives back x.
    auto half = explogflow::flow_series(rational(1, 2), cap, s);
    bool square_root = explogflow::circled_product(half, half, cap) == novikov::x();
    std::cout << "flow at t = 1/2 squares to x: " << (square_root ? "yes" : "no") << "\n";

    // (u^2 D) * (u D) = u^3 D^2 + u^2 D.
    using diffop::dpoly;
    std::vector<dpoly> f{dpoly::power(2), dpoly::power(1)};
    auto op = diffop::compose_first_order(f);
    std::cout << "(u^2 D) * (u D) = " << op.to_string() << "\n";
    std::cout << "normal form agrees: " << (diffop::verify_leibniz_normal_form(f) ? "yes" : "no") << "\n";
    return square_root ? 0 : 1;
}

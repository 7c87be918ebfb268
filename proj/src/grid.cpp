#include "hmw/grid.hpp"

namespace hmw {

// Composite Simpson over the closed node set {0, h, 2h, ..., rho_inf}.
// When the panel count is odd the last three panels are integrated with a
// single Newton 3/8 rule so the order stays O(h^4) throughout.
double integrate_closed(const RadialGrid& grid, const std::vector<double>& interior,
                        double at_axis, double at_wall) {
    const int n = grid.n;
    if (static_cast<int>(interior.size()) != n)
        throw std::invalid_argument("integrate_closed: sample count does not match grid");
    const double h = grid.h;
    const int panels = n + 1;
    auto closed = [&](int i) -> double {
        if (i == 0) return at_axis;
        if (i == n + 1) return at_wall;
        return interior[static_cast<std::size_t>(i - 1)];
    };

    int simpson_end = panels;        // Simpson covers [0, simpson_end]
    bool tail38 = (panels % 2 != 0); // 3/8 rule on the last three panels
    if (tail38) simpson_end = panels - 3;

    double sum = 0.0;
    if (simpson_end > 0) {
        sum += closed(0) + closed(simpson_end);
        for (int i = 1; i < simpson_end; ++i)
            sum += (i % 2 == 1 ? 4.0 : 2.0) * closed(i);
        sum *= h / 3.0;
    }
    if (tail38) {
        const int a = simpson_end;
        sum += 3.0 * h / 8.0 *
               (closed(a) + 3.0 * closed(a + 1) + 3.0 * closed(a + 2) + closed(a + 3));
    }
    return sum;
}

} // namespace hmw

#include "vpsum/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace vpsum::quad {
namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b) {
    const double m = 0.5 * (a + b);
    const double coarse = Rule::integrate(f, a, b);
    const double fine = Rule::integrate(f, a, m) + Rule::integrate(f, m, b);
    return {a, b, fine, std::abs(fine - coarse)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breaks, double abs_tol, int max_panels) {
    std::vector<double> pts{a};
    for (double x : breaks)
        if (x > a && x < b) pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::priority_queue<Panel> heap;
    double err_sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Panel p = make_panel(f, pts[i], pts[i + 1]);
        err_sum += p.error;
        heap.push(p);
    }

    const double min_width = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, b - a);

    std::vector<Panel> frozen;
    while (err_sum > abs_tol && !heap.empty() &&
           static_cast<int>(heap.size() + frozen.size()) < max_panels) {
        Panel worst = heap.top();
        heap.pop();
        err_sum -= worst.error;
        if (worst.b - worst.a < min_width) {
            frozen.push_back(worst);
            err_sum += worst.error;
            continue;
        }
        const double m = 0.5 * (worst.a + worst.b);
        Panel left = make_panel(f, worst.a, m);
        Panel right = make_panel(f, m, worst.b);
        err_sum += left.error + right.error;
        heap.push(left);
        heap.push(right);
    }

    // Sum smallest-first for a little extra accuracy.
    std::vector<Panel> all = std::move(frozen);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel& x, const Panel& y) { return std::abs(x.value) < std::abs(y.value); });
    Result r;
    for (const Panel& p : all) {
        r.value += p.value;
        r.error += p.error;
    }
    r.panels = static_cast<int>(all.size());
    r.converged = r.error <= abs_tol;
    return r;
}

Result integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 int max_panels) {
    return integrate(f, a, b, std::span<const double>{}, abs_tol, max_panels);
}

double periodic_trapezoid(const std::function<double(double)>& f, std::size_t n) {
    const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += f(h * static_cast<double>(j));
    return h * acc;
}

}  // namespace vpsum::quad

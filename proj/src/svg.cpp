#include "qsm/svg.hpp"

#include "qsm/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace qsm::svg {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 420;
constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 48;

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", x);
    return buf;
}

} // namespace

void write_bar_chart(const std::filesystem::path& path, const GridSpec& grid,
                     const std::vector<double>& values, const std::string& title,
                     const std::string& y_label)
{
    if (static_cast<int>(values.size()) != grid.d) {
        throw DimensionMismatch("bar chart needs one value per lattice point");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }

    const double vmax = std::max(*std::max_element(values.begin(), values.end()), 1e-12);
    const double y_top = 1.1 * vmax;
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const double slot = plot_w / grid.d;
    const double bar_w = 0.7 * slot;

    auto x_of = [&](int n) { return kMarginLeft + (grid.offset(n) + 0.5) * slot; };
    auto y_of = [&](double v) { return kMarginTop + plot_h * (1.0 - v / y_top); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
        << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    // axes
    out << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
        << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\"/>\n"
        << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\"/>\n";

    // y ticks: four evenly spaced levels
    for (int i = 1; i <= 4; ++i) {
        const double v = y_top * i / 4.0;
        const double y = y_of(v);
        out << "  <line x1=\"" << kMarginLeft - 4 << "\" y1=\"" << fmt(y) << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n"
            << "  <text x=\"" << kMarginLeft - 8 << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(v)
            << "</text>\n";
    }

    // x ticks at multiples of 5 percent
    for (int n = -grid.q; n <= grid.q; ++n) {
        if (n % 5 != 0) {
            continue;
        }
        const double x = x_of(n);
        out << "  <line x1=\"" << fmt(x) << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
            << fmt(x) << "\" y2=\"" << kMarginTop + plot_h + 4 << "\" stroke=\"black\"/>\n"
            << "  <text x=\"" << fmt(x) << "\" y=\"" << kMarginTop + plot_h + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt(grid.value(n)) << "</text>\n";
    }

    for (int n = -grid.q; n <= grid.q; ++n) {
        const double v = values[static_cast<std::size_t>(grid.offset(n))];
        const double y = y_of(v);
        out << "  <rect x=\"" << fmt(x_of(n) - bar_w / 2) << "\" y=\"" << fmt(y) << "\" width=\""
            << fmt(bar_w) << "\" height=\"" << fmt(kMarginTop + plot_h - y)
            << "\" fill=\"#4878a8\"/>\n";
    }

    out << "  <text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">return"
        << "</text>\n"
        << "  <text x=\"16\" y=\"" << kMarginTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 16 " << kMarginTop + plot_h / 2 << ")\">" << y_label
        << "</text>\n"
        << "</svg>\n";
}

} // namespace qsm::svg

#include "zetaeta/zero_finder.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "zetaeta/special_functions.hpp"

namespace zetaeta {

namespace {

constexpr double kBisectionWidth = 1e-9;
constexpr double kRevalidationBound = 1e-6;
constexpr char const * kHeaderPrefix = "# zeta-zeros v1 ";

double refine(CriticalLineFunction const & fn, double a, double fa, double b)
{
    while (b - a >= kBisectionWidth) {
        double const m = 0.5 * (a + b);
        double const fm = fn(m);
        if (fm == 0.0)
            return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

bool parse_double(std::string const & text, double & out)
{
    if (text.empty())
        return false;
    char * end = nullptr;
    errno = 0;
    out = std::strtod(text.c_str(), &end);
    return errno == 0 && end == text.c_str() + text.size() && std::isfinite(out);
}

} // namespace

void ZeroList::check_invariants() const
{
    for (std::size_t i = 0; i < ordinates.size(); ++i) {
        if (!(ordinates[i] > 0.0))
            throw InvalidArgument("zero ordinates must be positive");
        if (i > 0 && !(ordinates[i] > ordinates[i - 1]))
            throw InvalidArgument("zero ordinates must be strictly increasing");
    }
}

void PointSet::add(Complex z, int multiplicity)
{
    if (multiplicity <= 0)
        throw InvalidArgument("point multiplicity must be positive");
    points.push_back({z, multiplicity});
}

std::size_t PointSet::total_multiplicity() const
{
    std::size_t n = 0;
    for (auto const & p : points)
        n += static_cast<std::size_t>(p.multiplicity);
    return n;
}

double zero_scan_step(double t_max)
{
    double const step = 0.25 * (2.0 * kPi / std::log(t_max / (2.0 * kPi)));
    return std::min(step, 1.0);
}

double smooth_zero_count(double t)
{
    return riemann_siegel_theta(t) / kPi + 1.0;
}

std::vector<double> scan_sign_changes(CriticalLineFunction const & fn,
                                      double t_max, double step)
{
    if (!(step > 0.0) || !(t_max > 0.0))
        throw InvalidArgument("scan_sign_changes needs positive step and t_max");

    std::vector<double> roots;
    double a = step < t_max ? step : t_max;
    double fa = fn(a);
    if (fa == 0.0)
        roots.push_back(a);
    for (std::size_t i = 2;; ++i) {
        double b = static_cast<double>(i) * step;
        bool const last = b >= t_max;
        if (last)
            b = t_max;
        if (b <= a)
            break;
        double const fb = fn(b);
        if (fb == 0.0)
            roots.push_back(b);
        else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0))
            roots.push_back(refine(fn, a, fa, b));
        a = b;
        fa = fb;
        if (last)
            break;
    }
    return roots;
}

ZeroList find_zeros_up_to(double t_max, EvalConfig const & cfg)
{
    cfg.validate();
    if (!(t_max > 10.0 && t_max <= 12000.0))
        throw InvalidArgument("find_zeros_up_to requires 10 < t_max <= 12000");

    auto const z = [&cfg](double t) { return hardy_Z(t, cfg); };
    double const expected = std::round(smooth_zero_count(t_max));
    double step = zero_scan_step(t_max);
    for (int attempt = 0; attempt <= 3; ++attempt, step /= 2.0) {
        ZeroList list;
        list.ordinates = scan_sign_changes(z, t_max, step);
        list.max_t_searched = t_max;
        double const found = static_cast<double>(list.size());
        if (std::abs(found - expected) <= 1.0)
            return list;
    }
    throw CompletenessError("zero count up to t = " + format_double(t_max)
                            + " disagrees with theta(T)/pi + 1 = "
                            + format_double(expected) + " after 3 grid refinements");
}

ZeroList find_first_zeros(std::size_t count, EvalConfig const & cfg)
{
    if (count == 0)
        throw InvalidArgument("find_first_zeros needs count >= 1");
    double const target = static_cast<double>(count) + 2.0;
    if (smooth_zero_count(12000.0) < target)
        throw InvalidArgument("requested zero count exceeds the supported height");

    double lo = 11.0, hi = 12000.0;
    while (hi - lo > 1e-6) {
        double const mid = 0.5 * (lo + hi);
        (smooth_zero_count(mid) < target ? lo : hi) = mid;
    }
    double t_max = std::max(hi, 15.0);
    // A large S(T) at the chosen height can trip the completeness arbiter;
    // nudge the height by half a mean gap and try again.
    for (int attempt = 0;; ++attempt) {
        try {
            ZeroList list = find_zeros_up_to(std::min(t_max, 12000.0), cfg);
            if (list.size() < count)
                throw CompletenessError("fewer zeros than requested below t = "
                                        + format_double(t_max));
            return list;
        } catch (CompletenessError const &) {
            if (attempt == 2 || t_max >= 12000.0)
                throw;
            t_max += kPi / std::log(t_max / (2.0 * kPi));
        }
    }
}

std::size_t disc_count(PointSet const & set, double r)
{
    if (!(r >= 0.0))
        throw InvalidArgument("disc radius must be nonnegative");
    std::size_t n = 0;
    for (auto const & p : set.points)
        if (std::abs(p.value) <= r)
            n += static_cast<std::size_t>(p.multiplicity);
    return n;
}

std::size_t disc_count(ZeroList const & list, double r)
{
    if (!(r >= 0.0))
        throw InvalidArgument("disc radius must be nonnegative");
    std::size_t n = 0;
    for (double t : list.ordinates) {
        if (std::abs(Complex(0.5, t)) > r)
            break; // ordinates are increasing
        ++n;
    }
    return n;
}

PointSet to_point_set(ZeroList const & list, bool symmetrize)
{
    PointSet set;
    set.points.reserve(list.size() * (symmetrize ? 2 : 1));
    for (double t : list.ordinates) {
        set.add({0.5, t});
        if (symmetrize)
            set.add({0.5, -t});
    }
    return set;
}

PointSet symmetrize(ZeroList const & list)
{
    return to_point_set(list, true);
}

std::vector<DensityPoint> density_slope(PointSet const & set,
                                        std::vector<double> const & r_values)
{
    std::vector<DensityPoint> out;
    out.reserve(r_values.size());
    for (std::size_t i = 0; i < r_values.size(); ++i) {
        double const r = r_values[i];
        if (!(r > 0.0) || (i > 0 && !(r > r_values[i - 1])))
            throw InvalidArgument("density radii must be positive and increasing");
        out.push_back({r, static_cast<double>(disc_count(set, r)) / r});
    }
    return out;
}

void save_zeros(ZeroList const & list, std::string const & path)
{
    list.check_invariants();
    namespace fs = std::filesystem;
    fs::path const target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
    }
    fs::path const tmp = target.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot write " + tmp.string());
        out << kHeaderPrefix << "count=" << list.size()
            << " tmax=" << format_double(list.max_t_searched);
        if (list.source_tag != "zeta")
            out << ' ' << list.source_tag;
        out << '\n';
        for (double t : list.ordinates)
            out << format_double(t) << '\n';
        out.flush();
        if (!out)
            throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename cache into place at " + path);
    }
}

ZeroList load_zeros(std::string const & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);

    std::string line;
    if (!std::getline(in, line) || line.rfind(kHeaderPrefix, 0) != 0)
        throw FormatError(path + ": missing zeta-zeros v1 header");

    std::istringstream header(line.substr(std::string(kHeaderPrefix).size()));
    std::string count_tok, tmax_tok;
    header >> count_tok >> tmax_tok;
    if (count_tok.rfind("count=", 0) != 0 || tmax_tok.rfind("tmax=", 0) != 0)
        throw FormatError(path + ": header needs count= and tmax= fields");

    double count_value = 0.0;
    ZeroList list;
    if (!parse_double(count_tok.substr(6), count_value) || count_value < 0
        || count_value != std::floor(count_value))
        throw FormatError(path + ": bad count field");
    if (!parse_double(tmax_tok.substr(5), list.max_t_searched))
        throw FormatError(path + ": bad tmax field");

    std::string tag;
    std::getline(header, tag);
    tag.erase(0, tag.find_first_not_of(' '));
    list.source_tag = tag.empty() ? "zeta" : tag;

    auto const expected = static_cast<std::size_t>(count_value);
    list.ordinates.reserve(expected);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        double t = 0.0;
        if (!parse_double(line, t))
            throw FormatError(path + ":" + std::to_string(line_no) + ": not a number");
        if (!(t > 0.0))
            throw FormatError(path + ":" + std::to_string(line_no) + ": ordinate must be positive");
        if (!list.ordinates.empty() && !(t > list.ordinates.back()))
            throw FormatError(path + ":" + std::to_string(line_no)
                              + ": ordinates are not strictly increasing");
        list.ordinates.push_back(t);
    }
    if (list.size() != expected)
        throw FormatError(path + ": header count does not match the number of ordinates");
    list.validation_pending = true;
    return list;
}

void ensure_validated(ZeroList & list, CriticalLineFunction const & fn,
                      EvalConfig const & cfg)
{
    if (!list.validation_pending)
        return;
    CriticalLineFunction check = fn;
    if (!check) {
        if (list.source_tag != "zeta")
            throw ValidationError("no validator available for zero list tagged '"
                                  + list.source_tag + "'");
        check = [&cfg](double t) { return hardy_Z(t, cfg); };
    }
    for (double t : list.ordinates) {
        double const v = check(t);
        if (!(std::abs(v) < kRevalidationBound))
            throw ValidationError("ordinate " + format_double(t)
                                  + " is not a zero: |value| = " + format_double(std::abs(v)));
    }
    list.validation_pending = false;
}

ZeroList ensure_zero_cache(std::string const & path, std::size_t min_count,
                           EvalConfig const & cfg)
{
    if (std::filesystem::exists(path)) {
        try {
            ZeroList cached = load_zeros(path);
            if (cached.source_tag == "zeta" && cached.size() >= min_count)
                return cached;
        } catch (FormatError const &) {
            // regenerate below
        }
    }
    ZeroList fresh = find_first_zeros(min_count, cfg);
    save_zeros(fresh, path);
    return fresh;
}

} // namespace zetaeta

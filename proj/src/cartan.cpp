#include "klr/cartan.hpp"

#include <algorithm>

namespace klr {

std::size_t CartanDatum::idx(int a) const
{
    if (a < 0 || a >= num_labels())
        throw error(errc::unknown_label, "label index " + std::to_string(a) + " out of range");
    return static_cast<std::size_t>(a);
}

void CartanDatum::check_invariants() const
{
    const std::size_t n = form_.size();
    for (const auto& row : form_)
        if (row.size() != n)
            throw error(errc::length_mismatch, "form matrix is not square");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (form_[a][b] != form_[b][a])
                throw error(errc::non_symmetric,
                            "form[" + label_name(static_cast<int>(a)) + "," + label_name(static_cast<int>(b))
                                + "] != form[" + label_name(static_cast<int>(b)) + ","
                                + label_name(static_cast<int>(a)) + "]");
    for (std::size_t a = 0; a < n; ++a)
        if (form_[a][a] <= 0 || form_[a][a] % 2 != 0)
            throw error(errc::diagonal_not_positive_even,
                        label_name(static_cast<int>(a)) + "." + label_name(static_cast<int>(a)) + " = "
                            + std::to_string(form_[a][a]));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b)
                continue;
            const long num = 2 * form_[a][b];
            if (num > 0 || num % form_[a][a] != 0)
                throw error(errc::off_diagonal_not_nonpositive_integer,
                            "2(" + label_name(static_cast<int>(a)) + "." + label_name(static_cast<int>(b))
                                + ")/(" + label_name(static_cast<int>(a)) + "."
                                + label_name(static_cast<int>(a)) + ") is not a non-positive integer");
        }
}

CartanDatum CartanDatum::validate(std::vector<std::string> labels,
                                  std::vector<std::vector<long>> form)
{
    if (form.size() != labels.size())
        throw error(errc::length_mismatch, "form matrix does not match label count");
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b)
            if (labels[a] == labels[b])
                throw error(errc::config_error, "duplicate label '" + labels[a] + "'");
    CartanDatum d;
    d.names_ = std::move(labels);
    d.form_ = std::move(form);
    d.extended_ = false;
    d.check_invariants();
    return d;
}

CartanDatum CartanDatum::extend() const
{
    if (extended_)
        throw error(errc::config_error, "datum is already extended");
    const int n = num_solid();
    std::vector<std::vector<long>> form(static_cast<std::size_t>(2 * n),
                                        std::vector<long>(static_cast<std::size_t>(2 * n), 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            form[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = dot(a, b);
    for (int a = 0; a < n; ++a) {
        form[static_cast<std::size_t>(n + a)][static_cast<std::size_t>(n + a)] = dot(a, a);
        form[static_cast<std::size_t>(a)][static_cast<std::size_t>(n + a)] = -dot(a, a) / 2;
        form[static_cast<std::size_t>(n + a)][static_cast<std::size_t>(a)] = -dot(a, a) / 2;
    }
    CartanDatum d;
    d.names_ = names_;
    d.form_ = std::move(form);
    d.extended_ = true;
    d.check_invariants();
    return d;
}

int CartanDatum::bar(int a) const
{
    if (!extended_)
        throw error(errc::unknown_label, "bar() on a non-extended datum");
    idx(a);
    return is_barred(a) ? a - num_solid() : a + num_solid();
}

std::string CartanDatum::label_name(int a) const
{
    idx(a);
    return is_barred(a) ? "~" + names_[static_cast<std::size_t>(a - num_solid())]
                        : names_[static_cast<std::size_t>(a)];
}

int CartanDatum::label_index(const std::string& name) const
{
    bool barred = !name.empty() && name[0] == '~';
    const std::string base = barred ? name.substr(1) : name;
    auto it = std::find(names_.begin(), names_.end(), base);
    if (it == names_.end() || (barred && !extended_))
        throw error(errc::unknown_label, "unknown label '" + name + "'");
    int a = static_cast<int>(it - names_.begin());
    return barred ? a + num_solid() : a;
}

std::vector<std::tuple<int, int, Rat>> ScalarParams::s_terms(int a, int b) const
{
    std::vector<std::tuple<int, int, Rat>> out;
    for (const auto& [key, val] : s) {
        if (std::get<0>(key) == a && std::get<1>(key) == b && val != 0)
            out.emplace_back(std::get<2>(key), std::get<3>(key), val);
    }
    return out;
}

namespace {

// validate() for the extend() path leaves extended_ false; CartanDatum
// internals guard bar(), so params validation works off the label count only.
void check_s_support(const CartanDatum& d, int a, int b, int p, int q)
{
    if (a == b)
        throw error(errc::constraint_violation, "s^{pq} requires distinct labels");
    if (p <= 0 || q <= 0)
        throw error(errc::constraint_violation, "s^{pq} requires p,q > 0");
    if (p * d.dot(a, a) + q * d.dot(b, b) != -2 * d.dot(a, b))
        throw error(errc::constraint_violation,
                    "s^{" + std::to_string(p) + std::to_string(q) + "}(" + d.label_name(a) + ","
                        + d.label_name(b) + ") violates p(i.i)+q(j.j) = -2(i.j)");
}

} // namespace

ScalarParams validate_params(const CartanDatum& datum, const TMap& tmap, const RMap& rmap,
                             const SMap& smap)
{
    const int n = datum.num_labels();
    ScalarParams ps;
    ps.t.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)));
    ps.r.assign(static_cast<std::size_t>(n), Rat(1));

    for (const auto& [key, val] : tmap) {
        auto [a, b] = key;
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw error(errc::unknown_label, "t entry has unknown label");
        if (val == 0)
            throw error(errc::zero_unit, "t(" + datum.label_name(a) + "," + datum.label_name(b) + ") = 0");
        ps.t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = val;
    }
    for (const auto& [a, val] : rmap) {
        if (a < 0 || a >= n)
            throw error(errc::unknown_label, "r entry has unknown label");
        if (val == 0)
            throw error(errc::zero_unit, "r(" + datum.label_name(a) + ") = 0");
        ps.r[static_cast<std::size_t>(a)] = val;
    }
    for (int a = 0; a < n; ++a) {
        if (ps.t_of(a, a) != 1)
            throw error(errc::constraint_violation, "t(" + datum.label_name(a) + ","
                                                        + datum.label_name(a) + ") != 1");
        for (int b = 0; b < n; ++b)
            if (a != b && datum.dot(a, b) == 0 && ps.t_of(a, b) != ps.t_of(b, a))
                throw error(errc::constraint_violation,
                            "t(" + datum.label_name(a) + "," + datum.label_name(b)
                                + ") must be symmetric when the form vanishes");
    }

    for (const auto& [key, val] : smap) {
        auto [a, b, p, q] = key;
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw error(errc::unknown_label, "s entry has unknown label");
        if (val == 0)
            continue;
        check_s_support(datum, a, b, p, q);
        ps.s[{a, b, p, q}] = val;
        // the mirrored entry must agree; install it if absent
        auto mirror = smap.find({b, a, q, p});
        if (mirror != smap.end() && mirror->second != val)
            throw error(errc::constraint_violation,
                        "s^{pq}(i,j) != s^{qp}(j,i) for (" + datum.label_name(a) + ","
                            + datum.label_name(b) + ")");
        ps.s[{b, a, q, p}] = val;
    }
    return ps;
}

ScalarParams specialized_params(const CartanDatum& extended, const TMap& residual_t)
{
    if (!extended.extended())
        throw error(errc::config_error, "specialized_params needs an extended datum");
    const int n = extended.num_labels();

    TMap tmap;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b)
                continue;
            if (extended.is_barred(a) && !extended.is_barred(b) && extended.bar(a) == b)
                tmap[{a, b}] = Rat(-1);
            else if (!extended.is_barred(a) && extended.is_barred(b) && extended.bar(b) == a)
                tmap[{a, b}] = Rat(1);
            else if (extended.dot(a, b) == 0)
                tmap[{a, b}] = Rat(1);
        }
    }
    for (const auto& [key, val] : residual_t) {
        auto [a, b] = key;
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw error(errc::unknown_label, "residual t entry has unknown label");
        bool free_slot = !extended.is_barred(a) && !extended.is_barred(b) && a != b
                         && extended.dot(a, b) < 0;
        if (!free_slot)
            throw error(errc::residual_overrides_forced_entry,
                        "t(" + extended.label_name(a) + "," + extended.label_name(b)
                            + ") is forced by the specialization");
        if (val == 0)
            throw error(errc::zero_unit, "residual t entry is zero");
        tmap[{a, b}] = val;
    }
    return validate_params(extended, tmap, {}, {});
}

} // namespace klr

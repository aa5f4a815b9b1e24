#include "klr/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <utility>

namespace klr {

long BasisDiagram::degree(const CartanDatum& d) const
{
    const Seq t = top();
    long deg = 0;
    for (int k = 0; k < strands(); ++k)
        deg += exps[static_cast<std::size_t>(k)]
               * d.dot(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(k)]);
    for (int p = 1; p <= strands(); ++p)
        for (int q = p + 1; q <= strands(); ++q)
            if (perm(p) > perm(q))
                deg -= d.dot(bottom[static_cast<std::size_t>(p - 1)],
                             bottom[static_cast<std::size_t>(q - 1)]);
    return deg;
}

Element Element::zero(ContextPtr ctx, int n)
{
    Element e;
    e.ctx_ = std::move(ctx);
    e.n_ = n;
    return e;
}

void Element::add(const BasisDiagram& d, const Rat& c)
{
    if (d.strands() != n_ || static_cast<int>(d.exps.size()) != n_ || d.perm.size() != n_)
        throw error(errc::length_mismatch, "diagram does not fit the element's strand count");
    // callers may hand in un-canonicalized fractions; GMP comparisons
    // assume canonical form
    Rat cc = c;
    cc.canonicalize();
    if (cc == 0)
        return;
    auto [it, fresh] = terms_.emplace(d, cc);
    if (!fresh) {
        it->second += cc;
        if (it->second == 0)
            terms_.erase(it);
    }
}

namespace {

bool same_context(const Element& a, const Element& b)
{
    if (a.strands() != b.strands())
        return false;
    if (a.context() == b.context())
        return true;
    return a.context() && b.context() && *a.context() == *b.context();
}

void require_same_context(const Element& a, const Element& b, const char* what)
{
    if (!same_context(a, b))
        throw error(errc::context_mismatch, what);
}

} // namespace

Element& Element::operator+=(const Element& o)
{
    require_same_context(*this, o, "adding elements over different contexts");
    for (const auto& [d, c] : o.terms_)
        add(d, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    require_same_context(*this, o, "subtracting elements over different contexts");
    for (const auto& [d, c] : o.terms_)
        add(d, -c);
    return *this;
}

Element& Element::operator*=(const Rat& c)
{
    Rat cc = c;
    cc.canonicalize();
    if (cc == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, coeff] : terms_)
        coeff *= cc;
    return *this;
}

bool Element::operator==(const Element& o) const
{
    return same_context(*this, o) && terms_ == o.terms_;
}

namespace {

void check_seq(const ContextPtr& ctx, const Seq& seq)
{
    for (int a : seq)
        if (a < 0 || a >= ctx->datum.num_labels())
            throw error(errc::unknown_label, "sequence label out of range");
}

void check_word(int n, const std::vector<Token>& word)
{
    for (const Token& t : word) {
        if (t.kind == Token::Kind::X && (t.pos < 1 || t.pos > n))
            throw error(errc::index_out_of_range, "x_" + std::to_string(t.pos) + " on "
                                                      + std::to_string(n) + " strands");
        if (t.kind == Token::Kind::Psi && (t.pos < 1 || t.pos > n - 1))
            throw error(errc::index_out_of_range, "psi_" + std::to_string(t.pos) + " on "
                                                      + std::to_string(n) + " strands");
    }
}

struct Pending {
    Rat coeff;
    std::vector<Token> toks;
};

// Sequence entering token index q from below: bottom with all Psi tokens at
// indices >= q applied.
Seq seq_from(const std::vector<Token>& toks, std::size_t q, const Seq& bottom)
{
    Seq t = bottom;
    for (std::size_t idx = toks.size(); idx-- > q;) {
        const Token& tk = toks[idx];
        if (tk.kind == Token::Kind::Psi)
            std::swap(t[static_cast<std::size_t>(tk.pos - 1)],
                      t[static_cast<std::size_t>(tk.pos)]);
    }
    return t;
}

// Same on a bare crossing word.
Seq seq_from_cross(const std::vector<int>& v, std::size_t q, const Seq& bottom)
{
    Seq t = bottom;
    for (std::size_t idx = v.size(); idx-- > q;)
        std::swap(t[static_cast<std::size_t>(v[idx] - 1)], t[static_cast<std::size_t>(v[idx])]);
    return t;
}

struct Move {
    std::size_t at;
    bool braid; // false: commutation swap at (at, at+1); true: braid at (at..at+2)
};

std::vector<std::vector<int>> move_neighbors(const std::vector<int>& w, std::vector<Move>& how)
{
    std::vector<std::vector<int>> out;
    how.clear();
    for (std::size_t q = 0; q + 1 < w.size(); ++q) {
        if (std::abs(w[q] - w[q + 1]) > 1) {
            auto nb = w;
            std::swap(nb[q], nb[q + 1]);
            out.push_back(std::move(nb));
            how.push_back({q, false});
        }
    }
    for (std::size_t q = 0; q + 2 < w.size(); ++q) {
        if (w[q] == w[q + 2] && std::abs(w[q] - w[q + 1]) == 1) {
            auto nb = w;
            nb[q] = w[q + 1];
            nb[q + 1] = w[q];
            nb[q + 2] = w[q + 1];
            out.push_back(std::move(nb));
            how.push_back({q, true});
        }
    }
    return out;
}

// Shortest chain of commutation/braid moves between two reduced words of the
// same permutation (exists by Matsumoto's theorem).  Memoized per thread.
const std::vector<Move>& tits_path(const std::vector<int>& start, const std::vector<int>& goal)
{
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    thread_local std::map<Key, std::vector<Move>> cache;
    Key key{start, goal};
    auto hit = cache.find(key);
    if (hit != cache.end())
        return hit->second;

    std::map<std::vector<int>, std::pair<std::vector<int>, Move>> parent;
    std::deque<std::vector<int>> queue{start};
    parent.emplace(start, std::make_pair(std::vector<int>{}, Move{0, false}));
    bool found = (start == goal);
    while (!found && !queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        std::vector<Move> how;
        auto nbs = move_neighbors(cur, how);
        for (std::size_t i = 0; i < nbs.size(); ++i) {
            if (parent.count(nbs[i]))
                continue;
            parent.emplace(nbs[i], std::make_pair(cur, how[i]));
            if (nbs[i] == goal) {
                found = true;
                break;
            }
            queue.push_back(nbs[i]);
        }
    }
    if (!found)
        throw error(errc::index_out_of_range, "no move path between reduced words"); // engine bug
    std::vector<Move> path;
    for (std::vector<int> at = goal; at != start;) {
        auto& [prev, mv] = parent.at(at);
        path.push_back(mv);
        at = prev;
    }
    std::reverse(path.begin(), path.end());
    return cache.emplace(std::move(key), std::move(path)).first->second;
}

class Normalizer {
public:
    Normalizer(ContextPtr ctx, Seq bottom)
        : ctx_(std::move(ctx)), bottom_(std::move(bottom)),
          n_(static_cast<int>(bottom_.size())), out_(Element::zero(ctx_, n_))
    {
    }

    Element run(const std::vector<Token>& word, const Rat& coeff)
    {
        work_.push_back({coeff, word});
        while (!work_.empty()) {
            Pending cur = std::move(work_.back());
            work_.pop_back();
            if (cur.coeff == 0)
                continue;
            step(std::move(cur));
        }
        return std::move(out_);
    }

private:
    const Rat& r_of(int a) const { return ctx_->params.r_of(a); }
    const Rat& t_of(int a, int b) const { return ctx_->params.t_of(a, b); }
    long dot(int a, int b) const { return ctx_->datum.dot(a, b); }
    long c_of(int a, int b) const { return ctx_->datum.c(a, b); }

    void step(Pending cur)
    {
        // Phase 1: raise dots above crossings.  Pick the rightmost adjacent
        // (psi, x) pair; the swap preserves crossing count and the
        // dot-slide correction drops one crossing.
        auto& toks = cur.toks;
        std::size_t pair = toks.size(); // sentinel
        for (std::size_t q = toks.size(); q-- > 1;) {
            if (toks[q - 1].kind == Token::Kind::Psi && toks[q].kind == Token::Kind::X) {
                pair = q - 1;
                break;
            }
        }
        if (pair != toks.size()) {
            const int j = toks[pair].pos;
            const int k = toks[pair + 1].pos;
            if (k != j && k != j + 1) {
                std::swap(toks[pair], toks[pair + 1]);
                work_.push_back(std::move(cur));
                return;
            }
            const Seq t = seq_from(toks, pair + 2, bottom_);
            const int tj = t[static_cast<std::size_t>(j - 1)];
            const int tj1 = t[static_cast<std::size_t>(j)];
            if (tj == tj1) {
                // psi_j x_j = x_{j+1} psi_j + r,  psi_j x_{j+1} = x_j psi_j - r
                Pending corr;
                corr.coeff = cur.coeff * r_of(tj);
                if (k == j + 1)
                    corr.coeff = -corr.coeff;
                corr.toks.assign(toks.begin(), toks.begin() + static_cast<std::ptrdiff_t>(pair));
                corr.toks.insert(corr.toks.end(),
                                 toks.begin() + static_cast<std::ptrdiff_t>(pair) + 2, toks.end());
                work_.push_back(std::move(corr));
            }
            toks[pair] = tok_x(k == j ? j + 1 : j);
            toks[pair + 1] = tok_psi(j);
            work_.push_back(std::move(cur));
            return;
        }

        // All dots precede all crossings now.
        std::vector<Token> dots;
        std::vector<int> v;
        for (const Token& t : toks) {
            if (t.kind == Token::Kind::X)
                dots.push_back(t);
            else
                v.push_back(t.pos);
        }

        // Phase 2: find the lowest non-reduced step, scanning upward from the
        // bottom of the crossing word.
        Perm u = Perm::identity(n_);
        std::ptrdiff_t drop = -1;
        for (std::ptrdiff_t q = static_cast<std::ptrdiff_t>(v.size()) - 1; q >= 0; --q) {
            Perm su = Perm::transposition(n_, v[static_cast<std::size_t>(q)]) * u;
            if (su.length() < u.length()) {
                drop = q;
                break;
            }
            u = std::move(su);
        }

        if (drop < 0) {
            // Phase 3c: v is reduced for u; walk it to the canonical word.
            const std::vector<int> canw = u.canonical_word();
            if (v != canw)
                walk(cur.coeff, v, 0, canw, dots);
            emit(cur.coeff, dots, u);
            return;
        }

        // Phase 3b: token v[drop] cancels into the reduced part below it.
        // Walk the suffix to a reduced word starting with the same letter,
        // then contract the doubled letter by the quadratic relation.
        const int j = v[static_cast<std::size_t>(drop)];
        const Perm sju = Perm::transposition(n_, j) * u;
        std::vector<int> target{j};
        const std::vector<int> rest = sju.canonical_word();
        target.insert(target.end(), rest.begin(), rest.end());
        walk(cur.coeff, v, static_cast<std::size_t>(drop) + 1, target, dots);
        // v is now [prefix..., j, j, rest...]; the pair sits on the sequence
        // below it.
        const Seq t = sju.act(bottom_);
        const int a = t[static_cast<std::size_t>(j - 1)];
        const int b = t[static_cast<std::size_t>(j)];
        if (a == b)
            return; // psi^2 = 0
        std::vector<Token> base = dots;
        for (std::size_t q = 0; q < static_cast<std::size_t>(drop); ++q)
            base.push_back(tok_psi(v[q]));
        std::vector<Token> tail;
        for (int m : rest)
            tail.push_back(tok_psi(m));
        auto push_with = [&](const Rat& coeff, const std::vector<Token>& mid) {
            Pending nx;
            nx.coeff = cur.coeff * coeff;
            nx.toks = base;
            nx.toks.insert(nx.toks.end(), mid.begin(), mid.end());
            nx.toks.insert(nx.toks.end(), tail.begin(), tail.end());
            work_.push_back(std::move(nx));
        };
        if (dot(a, b) == 0) {
            push_with(t_of(a, b), {});
            return;
        }
        {
            std::vector<Token> mid(static_cast<std::size_t>(-c_of(a, b)), tok_x(j));
            push_with(t_of(a, b), mid);
        }
        {
            std::vector<Token> mid(static_cast<std::size_t>(-c_of(b, a)), tok_x(j + 1));
            push_with(t_of(b, a), mid);
        }
        for (const auto& [p, q, s] : ctx_->params.s_terms(a, b)) {
            std::vector<Token> mid(static_cast<std::size_t>(p), tok_x(j));
            mid.insert(mid.end(), static_cast<std::size_t>(q), tok_x(j + 1));
            push_with(s, mid);
        }
    }

    // Transforms v[lo..] into `target` in place by commutation and braid
    // moves; every braid move emits its correction terms (two crossings
    // fewer) into the worklist.
    void walk(const Rat& coeff, std::vector<int>& v, std::size_t lo,
              const std::vector<int>& target, const std::vector<Token>& dots)
    {
        std::vector<int> sub(v.begin() + static_cast<std::ptrdiff_t>(lo), v.end());
        const auto& path = tits_path(sub, target);
        for (const Move& mv : path) {
            const std::size_t q = lo + mv.at;
            if (!mv.braid) {
                std::swap(v[q], v[q + 1]);
                continue;
            }
            const int a = v[q];
            const int b = v[q + 1];
            const int m = std::min(a, b);
            const int sign = (a == m) ? 1 : -1;
            const Seq t = seq_from_cross(v, q + 3, bottom_);
            const int i1 = t[static_cast<std::size_t>(m - 1)];
            const int i2 = t[static_cast<std::size_t>(m)];
            const int i3 = t[static_cast<std::size_t>(m + 1)];
            if (i1 == i3 && c_of(i1, i2) + 1 <= 0) {
                std::vector<Token> base = dots;
                for (std::size_t idx = 0; idx < q; ++idx)
                    base.push_back(tok_psi(v[idx]));
                std::vector<Token> tail;
                for (std::size_t idx = q + 3; idx < v.size(); ++idx)
                    tail.push_back(tok_psi(v[idx]));
                auto push_corr = [&](const Rat& c0, const std::vector<Token>& mid) {
                    Pending nx;
                    nx.coeff = coeff * sign * c0;
                    nx.toks = base;
                    nx.toks.insert(nx.toks.end(), mid.begin(), mid.end());
                    nx.toks.insert(nx.toks.end(), tail.begin(), tail.end());
                    work_.push_back(std::move(nx));
                };
                const long cc = -c_of(i1, i2) - 1;
                const Rat lead = r_of(i1) * t_of(i1, i2);
                for (long d1 = 0; d1 <= cc; ++d1) {
                    std::vector<Token> mid(static_cast<std::size_t>(d1), tok_x(m));
                    mid.insert(mid.end(), static_cast<std::size_t>(cc - d1), tok_x(m + 2));
                    push_corr(lead, mid);
                }
                for (const auto& [p, qq, s] : ctx_->params.s_terms(i1, i2)) {
                    for (int k1 = 0; k1 <= p - 1; ++k1) {
                        std::vector<Token> mid(static_cast<std::size_t>(k1), tok_x(m));
                        mid.insert(mid.end(), static_cast<std::size_t>(qq), tok_x(m + 1));
                        mid.insert(mid.end(), static_cast<std::size_t>(p - 1 - k1), tok_x(m + 2));
                        push_corr(r_of(i1) * s, mid);
                    }
                }
            }
            v[q] = b;
            v[q + 1] = a;
            v[q + 2] = b;
        }
    }

    void emit(const Rat& coeff, const std::vector<Token>& dots, const Perm& w)
    {
        BasisDiagram d;
        d.bottom = bottom_;
        d.perm = w;
        d.exps.assign(static_cast<std::size_t>(n_), 0);
        for (const Token& t : dots)
            ++d.exps[static_cast<std::size_t>(t.pos - 1)];
        out_.add(d, coeff);
    }

    ContextPtr ctx_;
    Seq bottom_;
    int n_;
    Element out_;
    std::vector<Pending> work_;
};

} // namespace

Element idempotent(ContextPtr ctx, const Seq& seq)
{
    check_seq(ctx, seq);
    Element e = Element::zero(ctx, static_cast<int>(seq.size()));
    BasisDiagram d{seq, Perm::identity(static_cast<int>(seq.size())),
                   std::vector<int>(seq.size(), 0)};
    e.add(d, Rat(1));
    return e;
}

Element gen_x(ContextPtr ctx, int j, const Seq& seq)
{
    check_seq(ctx, seq);
    const int n = static_cast<int>(seq.size());
    if (j < 1 || j > n)
        throw error(errc::index_out_of_range, "x_" + std::to_string(j));
    Element e = Element::zero(ctx, n);
    BasisDiagram d{seq, Perm::identity(n), std::vector<int>(seq.size(), 0)};
    d.exps[static_cast<std::size_t>(j - 1)] = 1;
    e.add(d, Rat(1));
    return e;
}

Element gen_psi(ContextPtr ctx, int k, const Seq& seq)
{
    check_seq(ctx, seq);
    const int n = static_cast<int>(seq.size());
    if (k < 1 || k > n - 1)
        throw error(errc::index_out_of_range, "psi_" + std::to_string(k));
    Element e = Element::zero(ctx, n);
    BasisDiagram d{seq, Perm::transposition(n, k), std::vector<int>(seq.size(), 0)};
    e.add(d, Rat(1));
    return e;
}

Element normalize_word(ContextPtr ctx, const std::vector<Token>& word, const Seq& bottom)
{
    check_seq(ctx, bottom);
    check_word(static_cast<int>(bottom.size()), word);
    Normalizer nm(ctx, bottom);
    return nm.run(word, Rat(1));
}

namespace {

std::vector<Token> diagram_tokens(const BasisDiagram& d)
{
    std::vector<Token> toks;
    for (int k = 0; k < d.strands(); ++k)
        for (int rep = 0; rep < d.exps[static_cast<std::size_t>(k)]; ++rep)
            toks.push_back(tok_x(k + 1));
    for (int m : d.perm.canonical_word())
        toks.push_back(tok_psi(m));
    return toks;
}

} // namespace

Element apply_word(const std::vector<Token>& word, const Element& e)
{
    check_word(e.strands(), word);
    Element out = Element::zero(e.context(), e.strands());
    for (const auto& [d, c] : e.terms()) {
        std::vector<Token> toks = word;
        const std::vector<Token> below = diagram_tokens(d);
        toks.insert(toks.end(), below.begin(), below.end());
        Normalizer nm(e.context(), d.bottom);
        out += nm.run(toks, c);
    }
    return out;
}

Element mul(const Element& a, const Element& b)
{
    if (!same_context(a, b))
        throw error(errc::context_mismatch, "product of elements over different contexts");
    Element out = Element::zero(b.context(), b.strands());
    for (const auto& [da, ca] : a.terms()) {
        const std::vector<Token> ta = diagram_tokens(da);
        for (const auto& [db, cb] : b.terms()) {
            if (da.bottom != db.top())
                continue;
            std::vector<Token> toks = ta;
            const std::vector<Token> tb = diagram_tokens(db);
            toks.insert(toks.end(), tb.begin(), tb.end());
            Normalizer nm(b.context(), db.bottom);
            out += nm.run(toks, ca * cb);
        }
    }
    return out;
}

Element tensor(const Element& a, const Element& b)
{
    if (!(a.context() == b.context()
          || (a.context() && b.context() && *a.context() == *b.context())))
        throw error(errc::context_mismatch, "tensor of elements over different contexts");
    const int na = a.strands();
    const int nb = b.strands();
    Element out = Element::zero(a.context(), na + nb);
    for (const auto& [da, ca] : a.terms()) {
        for (const auto& [db, cb] : b.terms()) {
            BasisDiagram d;
            d.bottom = da.bottom;
            d.bottom.insert(d.bottom.end(), db.bottom.begin(), db.bottom.end());
            std::vector<int> img(static_cast<std::size_t>(na + nb));
            for (int k = 1; k <= na; ++k)
                img[static_cast<std::size_t>(k - 1)] = da.perm(k);
            for (int k = 1; k <= nb; ++k)
                img[static_cast<std::size_t>(na + k - 1)] = na + db.perm(k);
            d.perm = Perm::from_one_line(img);
            d.exps = da.exps;
            d.exps.insert(d.exps.end(), db.exps.begin(), db.exps.end());
            out.add(d, ca * cb);
        }
    }
    return out;
}

std::optional<long> degree_of(const Element& e)
{
    if (e.is_zero())
        return 0;
    std::optional<long> deg;
    for (const auto& [d, c] : e.terms()) {
        const long dd = d.degree(e.context()->datum);
        if (!deg)
            deg = dd;
        else if (*deg != dd)
            return std::nullopt;
    }
    return deg;
}

Element psi_w(ContextPtr ctx, const Perm& w, const Seq& seq)
{
    if (w.size() != static_cast<int>(seq.size()))
        throw error(errc::length_mismatch, "psi_w: permutation size does not match sequence");
    std::vector<Token> toks;
    for (int m : w.canonical_word())
        toks.push_back(tok_psi(m));
    return normalize_word(std::move(ctx), toks, seq);
}

Element nilhecke_en(ContextPtr ctx, int n, int label)
{
    if (n < 0)
        throw error(errc::index_out_of_range, "nilhecke_en: n must be nonnegative");
    if (label < 0 || label >= ctx->datum.num_labels())
        throw error(errc::unknown_label, "nilhecke_en: unknown label");
    Seq seq(static_cast<std::size_t>(n), label);
    Element e = Element::zero(ctx, n);
    BasisDiagram d;
    d.bottom = seq;
    d.perm = Perm::longest(n);
    d.exps.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        d.exps[static_cast<std::size_t>(k - 1)] = n - k;
    e.add(d, Rat(1));
    return e;
}

namespace {

// Number of solutions of sum a_k * wt_k = target with a_k >= 0.
long count_weighted(const std::vector<long>& wt, long target)
{
    if (target < 0)
        return 0;
    std::vector<long> dp(static_cast<std::size_t>(target) + 1, 0);
    dp[0] = 1;
    for (long w : wt)
        for (long s = w; s <= target; ++s)
            dp[static_cast<std::size_t>(s)] += dp[static_cast<std::size_t>(s - w)];
    return dp[static_cast<std::size_t>(target)];
}

void enumerate_weighted(const std::vector<long>& wt, long target, std::vector<int>& cur,
                        std::size_t at, const std::function<void(const std::vector<int>&)>& sink)
{
    if (at == wt.size()) {
        if (target == 0)
            sink(cur);
        return;
    }
    const long w = wt[at];
    for (long a = 0; a * w <= target; ++a) {
        cur[at] = static_cast<int>(a);
        enumerate_weighted(wt, target - a * w, cur, at + 1, sink);
    }
    cur[at] = 0;
}

long cross_degree(const CartanDatum& d, const Seq& bottom, const Perm& w)
{
    long deg = 0;
    const int n = static_cast<int>(bottom.size());
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            if (w(p) > w(q))
                deg -= d.dot(bottom[static_cast<std::size_t>(p - 1)],
                             bottom[static_cast<std::size_t>(q - 1)]);
    return deg;
}

} // namespace

long dim_oracle(const CartanDatum& datum, const Seq& bottom, const Seq& top, long degree)
{
    if (bottom.size() != top.size())
        throw error(errc::length_mismatch, "dim_oracle: boundary lengths differ");
    const int n = static_cast<int>(bottom.size());
    std::vector<long> wt;
    for (int a : top)
        wt.push_back(datum.dot(a, a));
    long count = 0;
    for (const Perm& w : all_perms(n)) {
        if (w.act(bottom) != top)
            continue;
        count += count_weighted(wt, degree - cross_degree(datum, bottom, w));
    }
    return count;
}

std::vector<BasisDiagram> enumerate_piece(const CartanDatum& datum, const Seq& bottom,
                                          const Seq& top, long degree)
{
    if (bottom.size() != top.size())
        throw error(errc::length_mismatch, "enumerate_piece: boundary lengths differ");
    const int n = static_cast<int>(bottom.size());
    std::vector<long> wt;
    for (int a : top)
        wt.push_back(datum.dot(a, a));
    std::vector<BasisDiagram> out;
    for (const Perm& w : all_perms(n)) {
        if (w.act(bottom) != top)
            continue;
        const long dots_deg = degree - cross_degree(datum, bottom, w);
        if (dots_deg < 0)
            continue;
        std::vector<int> cur(static_cast<std::size_t>(n), 0);
        enumerate_weighted(wt, dots_deg, cur, 0, [&](const std::vector<int>& exps) {
            out.push_back(BasisDiagram{bottom, w, exps});
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace klr

#include "qinv/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qinv/errors.hpp"

namespace qinv
{

namespace
{

struct Token
{
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size())
            break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::optional<long long> to_int(std::string_view s)
{
    long long v = 0;
    if (s.empty())
        return std::nullopt;
    const char* first = s.data();
    if (*first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

int parse_int_token(std::string_view s, int line, int column, const char* what)
{
    auto v = to_int(s);
    if (!v || *v < -1'000'000'000 || *v > 1'000'000'000)
        throw SyntaxError(std::string("expected integer ") + what + ", got '" + std::string(s) + "'", line, column);
    return static_cast<int>(*v);
}

int parse_arc_token(std::string_view s, int line, int column)
{
    const int v = parse_int_token(s, line, column, "arc label");
    if (v <= 0)
        throw SyntaxError("arc labels must be positive", line, column);
    return v;
}

/**
 * Recover crossing signs from the declared cyclic arc order.
 *
 * Each arc has one incoming (head) and one outgoing (tail) occurrence.
 * Slot 0 is always a head and slot 2 a tail. The over-strand direction
 * follows from the arc order, except on two-arc components where next and
 * previous coincide; those are settled by propagating head/tail facts, and
 * any pair still open takes the over-strand as running slot 3 -> slot 1.
 */
std::vector<int> resolve_signs(const std::vector<std::array<int, 4>>& xs, const std::vector<int>& next,
                               const std::vector<int>& prev)
{
    const std::size_t n = xs.size();
    // role[c][s]: +1 head, -1 tail, 0 unknown.
    std::vector<std::array<int, 4>> role(n, {1, 0, -1, 0});
    std::map<int, std::vector<std::pair<std::size_t, int>>> where;
    for (std::size_t c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s)
            where[xs[c][s]].push_back({c, s});

    std::deque<std::pair<std::size_t, int>> work;
    auto set_role = [&](std::size_t c, int s, int r) {
        if (role[c][s] == r)
            return;
        if (role[c][s] != 0)
            throw ValidationError("inconsistent strand orientation at crossing " + std::to_string(c + 1));
        role[c][s] = r;
        work.push_back({c, s});
    };
    for (std::size_t c = 0; c < n; ++c) {
        work.push_back({c, 0});
        work.push_back({c, 2});
        const int y1 = xs[c][1];
        const int y3 = xs[c][3];
        const bool fwd = next[y1] == y3; // over runs 1 -> 3
        const bool bwd = next[y3] == y1; // over runs 3 -> 1
        if (!fwd && !bwd)
            throw ValidationError("over-strand arcs " + std::to_string(y1) + " and " + std::to_string(y3) +
                                  " at crossing " + std::to_string(c + 1) + " are not consecutive");
        if (fwd != bwd) {
            set_role(c, 1, fwd ? 1 : -1);
            set_role(c, 3, fwd ? -1 : 1);
        }
        (void)prev;
    }
    auto drain = [&] {
        while (!work.empty()) {
            auto [c, s] = work.front();
            work.pop_front();
            const int r = role[c][s];
            if (r == 0)
                continue;
            // Other occurrence of the same arc has the opposite role.
            for (auto [c2, s2] : where[xs[c][s]])
                if (c2 != c || s2 != s)
                    set_role(c2, s2, -r);
            // Partner over slot has the opposite role.
            if (s == 1 || s == 3)
                set_role(c, 4 - s, -r);
        }
    };
    drain();
    for (std::size_t c = 0; c < n; ++c) {
        if (role[c][1] == 0) {
            set_role(c, 3, 1);
            set_role(c, 1, -1);
            drain();
        }
    }
    std::vector<int> signs(n);
    for (std::size_t c = 0; c < n; ++c)
        signs[c] = role[c][3] == 1 ? 1 : -1;
    return signs;
}

} // namespace

Diagram Diagram::parse(std::string_view text)
{
    std::vector<Component> comps;
    std::vector<std::array<int, 4>> xs;
    std::vector<int> x_lines;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) {
            if (end == text.size())
                break;
            continue;
        }
        if (toks[0].text == "x") {
            if (toks.size() != 5)
                throw SyntaxError("crossing line needs exactly four arc labels", line_no, toks[0].column);
            std::array<int, 4> x{};
            for (int s = 0; s < 4; ++s)
                x[s] = parse_arc_token(toks[s + 1].text, line_no, toks[s + 1].column);
            xs.push_back(x);
            x_lines.push_back(line_no);
        } else if (toks[0].text == "component") {
            if (toks.size() < 2)
                throw SyntaxError("component line needs an id", line_no, toks[0].column);
            Component c;
            c.id = parse_int_token(toks[1].text, line_no, toks[1].column, "component id");
            bool have_framing = false, have_arcs = false;
            for (std::size_t t = 2; t < toks.size(); ++t) {
                std::string_view tk = toks[t].text;
                const int col = toks[t].column;
                if (tk == "dotted") {
                    c.dotted = true;
                } else if (tk == "barred") {
                    c.barred = true;
                } else if (tk.starts_with("framing=")) {
                    c.framing = parse_int_token(tk.substr(8), line_no, col + 8, "framing");
                    have_framing = true;
                } else if (tk.starts_with("color=")) {
                    const int v = parse_int_token(tk.substr(6), line_no, col + 6, "color");
                    if (v < 0)
                        throw SyntaxError("color must be nonnegative", line_no, col + 6);
                    c.color = v;
                } else if (tk.starts_with("arcs=")) {
                    std::string_view list = tk.substr(5);
                    have_arcs = true;
                    if (list == "loop")
                        continue;
                    std::size_t p = 0;
                    int offset = col + 5;
                    while (true) {
                        std::size_t comma = list.find(',', p);
                        std::string_view item = list.substr(p, comma == std::string_view::npos ? list.size() - p : comma - p);
                        c.arcs.push_back(parse_arc_token(item, line_no, offset + static_cast<int>(p)));
                        if (comma == std::string_view::npos)
                            break;
                        p = comma + 1;
                    }
                } else {
                    throw SyntaxError("unknown component attribute '" + std::string(tk) + "'", line_no, col);
                }
            }
            if (!have_framing)
                throw SyntaxError("component line needs framing=<int>", line_no, toks[0].column);
            if (!have_arcs)
                throw SyntaxError("component line needs arcs=<list|loop>", line_no, toks[0].column);
            comps.push_back(std::move(c));
        } else {
            throw SyntaxError("expected 'component' or 'x', got '" + std::string(toks[0].text) + "'", line_no,
                              toks[0].column);
        }
        if (end == text.size())
            break;
    }

    // Arc bookkeeping for sign recovery.
    int max_arc = 0;
    for (const auto& c : comps)
        for (int a : c.arcs)
            max_arc = std::max(max_arc, a);
    for (const auto& x : xs)
        for (int a : x)
            max_arc = std::max(max_arc, a);
    std::vector<int> next(static_cast<std::size_t>(max_arc) + 1, 0), prev(next.size(), 0);
    std::vector<int> owner(next.size(), -1);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& arcs = comps[ci].arcs;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const int a = arcs[i];
            if (owner[a] != -1)
                throw ValidationError("arc " + std::to_string(a) + " listed in more than one component");
            owner[a] = static_cast<int>(ci);
            next[a] = arcs[(i + 1) % arcs.size()];
            prev[a] = arcs[(i + arcs.size() - 1) % arcs.size()];
        }
    }
    std::vector<int> uses(next.size(), 0);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (int a : xs[i]) {
            if (owner[a] == -1)
                throw ValidationError("arc " + std::to_string(a) + " at line " + std::to_string(x_lines[i]) +
                                      " belongs to no component");
            ++uses[a];
        }
    for (int a = 1; a <= max_arc; ++a) {
        if (owner[a] == -1)
            continue;
        const auto& comp = comps[static_cast<std::size_t>(owner[a])];
        const bool lone = comp.arcs.size() == 1;
        if (uses[a] != 2 && !(lone && uses[a] == 0))
            throw ValidationError("arc " + std::to_string(a) + " used " + std::to_string(uses[a]) +
                                  " times (expected 2)");
        if (lone && uses[a] == 2)
            throw ValidationError("single-arc component " + std::to_string(comp.id) + " cannot pass through a crossing");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (next[xs[i][0]] != xs[i][2])
            throw ValidationError("under-strand " + std::to_string(xs[i][0]) + " -> " + std::to_string(xs[i][2]) +
                                  " at line " + std::to_string(x_lines[i]) + " does not follow the component order");
    }
    auto signs = resolve_signs(xs, next, prev);
    std::vector<Crossing> crossings(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        crossings[i] = Crossing{xs[i], signs[i]};
    return Diagram(std::move(comps), std::move(crossings));
}

Diagram Diagram::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

Diagram::Diagram(std::vector<Component> components, std::vector<Crossing> crossings)
    : components_(std::move(components)), crossings_(std::move(crossings))
{
    validate();
}

void Diagram::validate()
{
    std::set<int> ids;
    for (const auto& c : components_) {
        if (!ids.insert(c.id).second)
            throw ValidationError("duplicate component id " + std::to_string(c.id));
        if (c.dotted && c.framing != 0)
            throw ValidationError("dotted component " + std::to_string(c.id) + " must have framing 0");
        if (c.dotted && c.barred)
            throw ValidationError("component " + std::to_string(c.id) + " cannot be both dotted and barred");
        if (c.barred && !c.color)
            throw ValidationError("barred component " + std::to_string(c.id) + " needs color=<int>");
        if (c.color && !c.barred)
            throw ValidationError("color= is only allowed on barred components (component " + std::to_string(c.id) + ")");
        if (c.color && *c.color < 0)
            throw ValidationError("negative color on component " + std::to_string(c.id));
    }
    const int top = max_arc();
    arc_component_.assign(static_cast<std::size_t>(top) + 1, -1);
    for (std::size_t ci = 0; ci < components_.size(); ++ci)
        for (int a : components_[ci].arcs) {
            if (a <= 0)
                throw ValidationError("arc labels must be positive");
            if (arc_component_[a] != -1)
                throw ValidationError("arc " + std::to_string(a) + " listed twice");
            arc_component_[a] = static_cast<int>(ci);
        }

    // head/tail occurrences per arc
    std::vector<int> heads(arc_component_.size(), 0), tails(arc_component_.size(), 0);
    std::vector<std::pair<std::size_t, int>> head_at(arc_component_.size(), {0, -1});
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        const auto& x = crossings_[i];
        if (x.sign != 1 && x.sign != -1)
            throw ValidationError("crossing sign must be +1 or -1");
        for (int s = 0; s < 4; ++s) {
            const int a = x.arcs[s];
            if (a <= 0 || a > top || arc_component_[a] == -1)
                throw ValidationError("crossing " + std::to_string(i + 1) + " uses undeclared arc " + std::to_string(a));
            if (x.is_incoming(s)) {
                ++heads[a];
                head_at[a] = {i, s};
            } else {
                ++tails[a];
            }
        }
    }
    for (const auto& c : components_) {
        const bool lone = c.arcs.size() == 1;
        for (std::size_t k = 0; k < c.arcs.size(); ++k) {
            const int a = c.arcs[k];
            if (lone && heads[a] == 0 && tails[a] == 0)
                continue;
            if (heads[a] != 1 || tails[a] != 1)
                throw ValidationError("arc " + std::to_string(a) + " used " + std::to_string(heads[a] + tails[a]) +
                                      " times (expected 2, one in and one out)");
            // Straight through the head crossing is the next arc of the component.
            const auto [ci, s] = head_at[a];
            const int through = crossings_[ci].arcs[(s + 2) % 4];
            const int expect = c.arcs[(k + 1) % c.arcs.size()];
            if (through != expect)
                throw ValidationError("component " + std::to_string(c.id) + " trace mismatch: arc " + std::to_string(a) +
                                      " continues as " + std::to_string(through) + ", declared " + std::to_string(expect));
        }
    }
    // Two closed curves in the plane cross an even number of times.
    std::map<std::pair<std::size_t, std::size_t>, int> pair_count;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        auto [u, o] = crossing_components(i);
        if (u != o)
            ++pair_count[{std::min(u, o), std::max(u, o)}];
    }
    for (const auto& [key, cnt] : pair_count)
        if (cnt % 2 != 0)
            throw ValidationError("components " + std::to_string(components_[key.first].id) + " and " +
                                  std::to_string(components_[key.second].id) + " cross an odd number of times");
}

std::size_t Diagram::arc_count() const noexcept
{
    std::size_t n = 0;
    for (const auto& c : components_)
        n += c.arcs.size();
    return n;
}

bool Diagram::has_dotted() const noexcept
{
    return std::any_of(components_.begin(), components_.end(), [](const Component& c) { return c.dotted; });
}

bool Diagram::has_barred() const noexcept
{
    return std::any_of(components_.begin(), components_.end(), [](const Component& c) { return c.barred; });
}

std::size_t Diagram::component_of_arc(int arc) const
{
    if (arc <= 0 || static_cast<std::size_t>(arc) >= arc_component_.size() || arc_component_[arc] < 0)
        throw std::out_of_range("unknown arc " + std::to_string(arc));
    return static_cast<std::size_t>(arc_component_[arc]);
}

std::pair<std::size_t, std::size_t> Diagram::crossing_components(std::size_t i) const
{
    const auto& x = crossings_.at(i);
    return {component_of_arc(x.arcs[0]), component_of_arc(x.arcs[1])};
}

int Diagram::max_arc() const noexcept
{
    int m = 0;
    for (const auto& c : components_)
        for (int a : c.arcs)
            m = std::max(m, a);
    for (const auto& x : crossings_)
        for (int a : x.arcs)
            m = std::max(m, a);
    return m;
}

int Diagram::max_component_id() const noexcept
{
    int m = 0;
    for (const auto& c : components_)
        m = std::max(m, c.id);
    return m;
}

int Diagram::writhe() const noexcept
{
    int w = 0;
    for (const auto& x : crossings_)
        w += x.sign;
    return w;
}

int Diagram::self_writhe(std::size_t component) const
{
    int w = 0;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        auto [u, o] = crossing_components(i);
        if (u == component && o == component)
            w += crossings_[i].sign;
    }
    return w;
}

Diagram Diagram::with_metadata(std::size_t component, int framing, bool dotted, bool barred,
                               std::optional<int> color) const
{
    auto comps = components_;
    auto& c = comps.at(component);
    c.framing = framing;
    c.dotted = dotted;
    c.barred = barred;
    c.color = color;
    return Diagram(std::move(comps), crossings_);
}

std::string Diagram::serialize() const
{
    std::ostringstream os;
    for (const auto& c : components_) {
        os << "component " << c.id << " framing=" << c.framing;
        if (c.dotted)
            os << " dotted";
        if (c.barred)
            os << " barred color=" << *c.color;
        os << " arcs=";
        if (c.arcs.empty()) {
            os << "loop";
        } else {
            for (std::size_t i = 0; i < c.arcs.size(); ++i)
                os << (i ? "," : "") << c.arcs[i];
        }
        os << "\n";
    }
    for (const auto& x : crossings_)
        os << "x " << x.arcs[0] << " " << x.arcs[1] << " " << x.arcs[2] << " " << x.arcs[3] << "\n";
    return os.str();
}

Diagram Diagram::from_crossings(std::vector<Crossing> crossings, int free_loops)
{
    // successor: the arc leaving straight through the head of each arc.
    std::map<int, int> succ;
    std::map<int, int> head_count, tail_count;
    for (const auto& x : crossings)
        for (int s = 0; s < 4; ++s) {
            const int a = x.arcs[s];
            if (x.is_incoming(s)) {
                ++head_count[a];
                succ[a] = x.arcs[(s + 2) % 4];
            } else {
                ++tail_count[a];
            }
        }
    for (const auto& [a, n] : head_count)
        if (n != 1 || tail_count[a] != 1)
            throw ValidationError("from_crossings: arc " + std::to_string(a) + " is not used once in and once out");
    for (const auto& [a, n] : tail_count)
        if (head_count[a] != 1)
            throw ValidationError("from_crossings: arc " + std::to_string(a) + " has no incoming end");

    std::map<int, int> relabel;
    std::vector<Component> comps;
    int next_label = 1;
    for (const auto& x : crossings)
        for (int s = 0; s < 4; ++s) {
            int start = x.arcs[s];
            if (relabel.count(start))
                continue;
            Component c;
            c.id = static_cast<int>(comps.size()) + 1;
            int a = start;
            do {
                relabel[a] = next_label;
                c.arcs.push_back(next_label++);
                a = succ.at(a);
            } while (a != start);
            comps.push_back(std::move(c));
        }
    for (int i = 0; i < free_loops; ++i) {
        Component c;
        c.id = static_cast<int>(comps.size()) + 1;
        comps.push_back(std::move(c));
    }
    for (auto& x : crossings)
        for (auto& a : x.arcs)
            a = relabel.at(a);
    return Diagram(std::move(comps), std::move(crossings));
}

Diagram Diagram::from_unoriented(const std::vector<std::array<int, 4>>& crossings, int free_loops)
{
    const std::size_t n = crossings.size();
    std::map<int, std::vector<std::pair<std::size_t, int>>> ends;
    for (std::size_t c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s)
            ends[crossings[c][s]].push_back({c, s});
    for (const auto& [a, e] : ends)
        if (e.size() != 2)
            throw ValidationError("arc " + std::to_string(a) + " does not have two ends");
    // incoming[c][s]: 1 in, 0 out, -1 unknown
    std::vector<std::array<int, 4>> incoming(n, {-1, -1, -1, -1});
    for (std::size_t c0 = 0; c0 < n; ++c0)
        for (int s0 = 0; s0 < 4; ++s0) {
            if (incoming[c0][s0] != -1)
                continue;
            std::size_t c = c0;
            int s = s0;
            while (incoming[c][s] == -1) {
                incoming[c][s] = 1;
                const int out = (s + 2) % 4;
                incoming[c][out] = 0;
                const auto& e = ends[crossings[c][out]];
                const auto next = e[0] == std::make_pair(c, out) ? e[1] : e[0];
                c = next.first;
                s = next.second;
            }
        }
    std::vector<Crossing> xs;
    xs.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        auto x = crossings[c];
        auto in = incoming[c];
        if (in[0] != 1) {
            x = {x[2], x[3], x[0], x[1]};
            in = {in[2], in[3], in[0], in[1]};
        }
        xs.push_back(Crossing{x, in[3] == 1 ? 1 : -1});
    }
    return from_crossings(std::move(xs), free_loops);
}

LinkingMatrix LinkingMatrix::from_rows(const std::vector<std::vector<long long>>& rows)
{
    LinkingMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("linking matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.entries_[i * m.n_ + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < m.n_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("linking matrix must be symmetric");
    return m;
}

void LinkingMatrix::set(std::size_t i, std::size_t j, long long v)
{
    entries_[i * n_ + j] = v;
    entries_[j * n_ + i] = v;
}

LinkingMatrix LinkingMatrix::submatrix(std::span<const std::size_t> indices) const
{
    LinkingMatrix m(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < indices.size(); ++j)
            m.entries_[i * m.n_ + j] = at(indices[i], indices[j]);
    return m;
}

LinkingMatrix LinkingMatrix::operator-() const
{
    LinkingMatrix m = *this;
    for (auto& v : m.entries_)
        v = -v;
    return m;
}

std::string LinkingMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < n_; ++j)
            os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

LinkingMatrix linking_matrix(const Diagram& d)
{
    const std::size_t n = d.component_count();
    LinkingMatrix m(n);
    std::vector<long long> twice(n * n, 0);
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
        auto [u, o] = d.crossing_components(i);
        if (u != o) {
            twice[u * n + o] += d.crossings()[i].sign;
            twice[o * n + u] += d.crossings()[i].sign;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = d.components()[i];
        m.set(i, i, c.dotted ? 0 : c.framing);
        for (std::size_t j = i + 1; j < n; ++j)
            m.set(i, j, twice[i * n + j] / 2);
    }
    return m;
}

Diagram blow_up(const Diagram& d, int sign)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("blow_up sign must be +1 or -1");
    auto comps = d.components();
    Component c;
    c.id = d.max_component_id() + 1;
    c.framing = sign;
    comps.push_back(std::move(c));
    return Diagram(std::move(comps), d.crossings());
}

namespace
{

/// Same crossing seen with over and under exchanged.
Crossing flipped(const Crossing& x)
{
    const auto& a = x.arcs;
    // Restart the counterclockwise list at the old incoming over-strand.
    if (x.sign > 0)
        return Crossing{{a[3], a[0], a[1], a[2]}, -1};
    return Crossing{{a[1], a[2], a[3], a[0]}, 1};
}

} // namespace

Diagram mirror(const Diagram& d)
{
    auto comps = d.components();
    for (auto& c : comps)
        c.framing = -c.framing;
    std::vector<Crossing> xs;
    xs.reserve(d.crossing_count());
    for (const auto& x : d.crossings())
        xs.push_back(flipped(x));
    return Diagram(std::move(comps), std::move(xs));
}

Diagram switch_crossing(const Diagram& d, std::size_t i)
{
    auto xs = d.crossings();
    xs.at(i) = flipped(xs[i]);
    return Diagram(d.components(), std::move(xs));
}

Diagram disjoint_union(const Diagram& a, const Diagram& b)
{
    const int arc_shift = a.max_arc();
    const int id_shift = a.max_component_id();
    auto comps = a.components();
    auto xs = a.crossings();
    for (auto c : b.components()) {
        c.id += id_shift;
        for (auto& arc : c.arcs)
            arc += arc_shift;
        comps.push_back(std::move(c));
    }
    for (auto x : b.crossings()) {
        for (auto& arc : x.arcs)
            arc += arc_shift;
        xs.push_back(x);
    }
    return Diagram(std::move(comps), std::move(xs));
}

Diagram with_kinks(const Diagram& d, std::size_t component, int count)
{
    auto comps = d.components();
    auto xs = d.crossings();
    int fresh = d.max_arc();
    auto& comp = comps.at(component);
    const int sign = count > 0 ? 1 : -1;
    for (int k = 0; k < (count > 0 ? count : -count); ++k) {
        bool crossingless = comp.arcs.empty();
        if (comp.arcs.size() == 1) {
            // A lone arc is a crossingless circle.
            crossingless = true;
            comp.arcs.clear();
        }
        if (crossingless) {
            const int p = ++fresh, q = ++fresh;
            // Under p -> q; over q -> p.
            xs.push_back(sign > 0 ? Crossing{{p, p, q, q}, 1} : Crossing{{p, q, q, p}, -1});
            comp.arcs = {p, q};
            continue;
        }
        const int x1 = comp.arcs.front();
        const int q = ++fresh, r = ++fresh;
        // The old head of x1 becomes the head of r.
        for (auto& x : xs) {
            bool done = false;
            for (int s = 0; s < 4; ++s)
                if (x.arcs[s] == x1 && x.is_incoming(s)) {
                    x.arcs[s] = r;
                    done = true;
                    break;
                }
            if (done)
                break;
        }
        xs.push_back(sign > 0 ? Crossing{{x1, r, q, q}, 1} : Crossing{{x1, q, q, r}, -1});
        comp.arcs.insert(comp.arcs.begin() + 1, {q, r});
    }
    return Diagram(std::move(comps), std::move(xs));
}

Diagram oriented_smoothing(const Diagram& d, std::size_t i)
{
    auto xs = d.crossings();
    const Crossing site = xs.at(i);
    xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
    // Incoming arcs continue into the adjacent outgoing arcs:
    // sign + : 0 -> 1 and 3 -> 2;  sign - : 0 -> 3 and 1 -> 2.
    std::array<std::pair<int, int>, 2> joins = site.sign > 0
                                                   ? std::array<std::pair<int, int>, 2>{{{site.arcs[0], site.arcs[1]}, {site.arcs[3], site.arcs[2]}}}
                                                   : std::array<std::pair<int, int>, 2>{{{site.arcs[0], site.arcs[3]}, {site.arcs[1], site.arcs[2]}}};
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int a) {
        auto it = parent.find(a);
        if (it == parent.end() || it->second == a)
            return a;
        return it->second = find(it->second);
    };
    std::set<int> joined;
    for (auto [in, out] : joins) {
        const int ra = find(in), rb = find(out);
        if (ra != rb)
            parent[rb] = ra;
        joined.insert(in);
        joined.insert(out);
    }
    std::set<int> present;
    for (auto& x : xs)
        for (auto& a : x.arcs) {
            a = find(a);
            present.insert(a);
        }
    // Merged arcs that no longer touch any crossing are closed circles.
    std::set<int> loops;
    for (int a : joined)
        if (!present.count(find(a)))
            loops.insert(find(a));
    int free_loops = static_cast<int>(loops.size());
    for (const auto& c : d.components())
        if (c.arcs.empty() || (c.arcs.size() == 1 && !present.count(c.arcs[0]) && !joined.count(c.arcs[0])))
            ++free_loops;
    return Diagram::from_crossings(std::move(xs), free_loops);
}

Diagram braid_closure(int strands, const std::vector<int>& word)
{
    if (strands < 1)
        throw std::invalid_argument("braid needs at least one strand");
    std::vector<int> current(static_cast<std::size_t>(strands));
    int fresh = 0;
    for (auto& a : current)
        a = ++fresh;
    const std::vector<int> bottom = current;
    std::vector<Crossing> xs;
    std::vector<bool> touched(static_cast<std::size_t>(strands), false);
    for (int letter : word) {
        const int j = letter > 0 ? letter : -letter;
        if (j < 1 || j >= strands)
            throw std::invalid_argument("braid letter out of range");
        const std::size_t i = static_cast<std::size_t>(j - 1);
        const int L = current[i], R = current[i + 1];
        const int Lp = ++fresh, Rp = ++fresh;
        // Strand L moves to the right position, strand R to the left.
        if (letter > 0)
            xs.push_back(Crossing{{R, Rp, Lp, L}, 1});
        else
            xs.push_back(Crossing{{L, R, Rp, Lp}, -1});
        current[i] = Lp;
        current[i + 1] = Rp;
        touched[i] = touched[i + 1] = true;
    }
    // Close: top label at each position is identified with the bottom label.
    std::map<int, int> ident;
    for (std::size_t p = 0; p < current.size(); ++p)
        if (current[p] != bottom[p])
            ident[current[p]] = bottom[p];
    for (auto& x : xs)
        for (auto& a : x.arcs)
            if (auto it = ident.find(a); it != ident.end())
                a = it->second;
    int loops = 0;
    for (std::size_t p = 0; p < touched.size(); ++p)
        loops += touched[p] ? 0 : 1;
    return Diagram::from_crossings(std::move(xs), loops);
}

} // namespace qinv

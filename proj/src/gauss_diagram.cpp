#include "vdelta/gauss_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vdelta/errors.hpp"

namespace vdelta {

GaussDiagram::GaussDiagram(int n_components) {
    if (n_components < 1) throw std::invalid_argument("component count must be >= 1");
    components_.resize(static_cast<std::size_t>(n_components));
}

int GaussDiagram::endpoint_count() const {
    int n = 0;
    for (const auto& c : components_) n += static_cast<int>(c.size());
    return n;
}

int GaussDiagram::sign(int id) const {
    auto it = signs_.find(id);
    if (it == signs_.end()) throw std::out_of_range("unknown chord id " + std::to_string(id));
    return it->second;
}

int GaussDiagram::max_chord_id() const {
    return signs_.empty() ? 0 : signs_.rbegin()->first;
}

SlotRef GaussDiagram::find(int chord, Role role) const {
    for (int ci = 0; ci < component_count(); ++ci) {
        const auto& comp = components_[static_cast<std::size_t>(ci)];
        for (int pi = 0; pi < static_cast<int>(comp.size()); ++pi) {
            const Endpoint& e = comp[static_cast<std::size_t>(pi)];
            if (e.chord == chord && e.role == role) return {ci, pi};
        }
    }
    throw std::out_of_range("unknown chord id " + std::to_string(chord));
}

const Endpoint& GaussDiagram::at(SlotRef s) const {
    return components_.at(static_cast<std::size_t>(s.component))
        .at(static_cast<std::size_t>(s.position));
}

bool GaussDiagram::is_self_chord(int chord) const {
    return find(chord, Role::Over).component == find(chord, Role::Under).component;
}

void GaussDiagram::insert_endpoints(int component, int gap, const std::vector<Endpoint>& endpoints) {
    auto& comp = components_.at(static_cast<std::size_t>(component));
    if (gap < 0 || gap > static_cast<int>(comp.size()))
        throw std::invalid_argument("insertion gap out of range");
    comp.insert(comp.begin() + gap, endpoints.begin(), endpoints.end());
}

void GaussDiagram::erase_chord(int id) {
    if (!has_chord(id)) throw std::out_of_range("unknown chord id " + std::to_string(id));
    for (auto& comp : components_) {
        comp.erase(std::remove_if(comp.begin(), comp.end(),
                                  [id](const Endpoint& e) { return e.chord == id; }),
                   comp.end());
    }
    signs_.erase(id);
}

void GaussDiagram::set_sign(int id, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    signs_[id] = sign;
}

void GaussDiagram::set_endpoint(SlotRef s, Endpoint e) {
    components_.at(static_cast<std::size_t>(s.component))
        .at(static_cast<std::size_t>(s.position)) = e;
}

int GaussDiagram::add_chord(int sign, int comp_over, int gap_over, int comp_under, int gap_under) {
    int id = max_chord_id() + 1;
    set_sign(id, sign);
    insert_endpoints(comp_over, gap_over, {{id, Role::Over}});
    insert_endpoints(comp_under, gap_under, {{id, Role::Under}});
    return id;
}

void GaussDiagram::validate() const {
    if (components_.empty()) throw std::invalid_argument("diagram has no components");
    std::map<int, std::pair<int, int>> counts; // id -> (#over, #under)
    for (const auto& comp : components_) {
        for (const Endpoint& e : comp) {
            auto& c = counts[e.chord];
            (e.role == Role::Over ? c.first : c.second)++;
            if (e.chord <= 0) throw std::invalid_argument("chord ids must be positive");
        }
    }
    if (counts.size() != signs_.size())
        throw std::invalid_argument("chord set does not match endpoint set");
    for (const auto& [id, c] : counts) {
        if (c.first != 1 || c.second != 1)
            throw std::invalid_argument("chord " + std::to_string(id) +
                                        " must have exactly one Over and one Under endpoint");
        if (!signs_.count(id))
            throw std::invalid_argument("chord " + std::to_string(id) + " has no sign");
    }
    for (const auto& [id, s] : signs_)
        if (s != 1 && s != -1)
            throw std::invalid_argument("chord " + std::to_string(id) + " has invalid sign");
}

GaussDiagram new_diagram(int n_components) {
    return GaussDiagram(n_components);
}

namespace {

struct Token {
    int chord;
    Role role;
    int sign;
};

// One parsed component: either the empty-component literal or a token list.
struct RawComponent {
    bool empty_literal = false;
    std::vector<Token> tokens;
};

} // namespace

GaussDiagram parse_gauss_code(const std::string& text) {
    // Strip whitespace, remembering original positions for error reporting.
    std::string s;
    std::vector<std::size_t> pos_map;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s.push_back(text[i]);
            pos_map.push_back(i);
        }
    }
    auto orig = [&](std::size_t i) { return i < pos_map.size() ? pos_map[i] : text.size(); };

    std::vector<RawComponent> comps;
    std::size_t i = 0;
    bool at_component_start = true;
    comps.emplace_back();
    while (i < s.size()) {
        char c = s[i];
        if (c == '|') {
            comps.emplace_back();
            at_component_start = true;
            ++i;
            continue;
        }
        if (c == ',') {
            if (at_component_start || comps.back().tokens.empty())
                throw parse_error("unexpected ','", orig(i));
            ++i;
            continue;
        }
        if (c == '0' && at_component_start) {
            comps.back().empty_literal = true;
            ++i;
            if (i < s.size() && s[i] != '|')
                throw parse_error("empty-component literal '0' must stand alone", orig(i));
            continue;
        }
        if (comps.back().empty_literal)
            throw parse_error("token after empty-component literal", orig(i));
        if (c != 'O' && c != 'U') throw parse_error("expected 'O' or 'U'", orig(i));
        Role role = (c == 'O') ? Role::Over : Role::Under;
        std::size_t j = i + 1;
        long id = 0;
        std::size_t digits = 0;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
            id = id * 10 + (s[j] - '0');
            if (id > 1000000000) throw parse_error("chord id too large", orig(i));
            ++j;
            ++digits;
        }
        if (digits == 0) throw parse_error("expected chord id", orig(j));
        if (id == 0) throw parse_error("chord ids must be positive", orig(i + 1));
        if (j >= s.size() || (s[j] != '+' && s[j] != '-'))
            throw parse_error("expected sign '+' or '-'", orig(j));
        int sign = (s[j] == '+') ? 1 : -1;
        comps.back().tokens.push_back({static_cast<int>(id), role, sign});
        at_component_start = false;
        i = j + 1;
        if (i < s.size() && s[i] != ',' && s[i] != '|')
            throw parse_error("expected ',' or '|'", orig(i));
    }

    GaussDiagram d(static_cast<int>(comps.size()));
    std::map<int, std::pair<int, int>> role_counts;
    std::map<int, int> first_sign;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        std::vector<Endpoint> eps;
        for (const Token& t : comps[static_cast<std::size_t>(ci)].tokens) {
            eps.push_back({t.chord, t.role});
            auto& rc = role_counts[t.chord];
            (t.role == Role::Over ? rc.first : rc.second)++;
            auto it = first_sign.find(t.chord);
            if (it == first_sign.end()) {
                first_sign[t.chord] = t.sign;
            } else if (it->second != t.sign) {
                throw parse_error("sign mismatch for chord " + std::to_string(t.chord), text.size());
            }
        }
        d.insert_endpoints(ci, 0, eps);
    }
    for (const auto& [id, rc] : role_counts) {
        if (rc.first > 1 || rc.second > 1)
            throw parse_error("duplicate role for chord " + std::to_string(id), text.size());
        if (rc.first + rc.second != 2)
            throw parse_error("chord " + std::to_string(id) + " must appear exactly twice",
                              text.size());
    }
    for (const auto& [id, sgn] : first_sign) d.set_sign(id, sgn);
    d.validate();
    return d;
}

std::string serialize(const GaussDiagram& d) {
    if (d.component_count() == 1 && d.component(0).empty()) return "";
    std::ostringstream out;
    for (int ci = 0; ci < d.component_count(); ++ci) {
        if (ci > 0) out << '|';
        const auto& comp = d.component(ci);
        if (comp.empty()) {
            out << '0';
            continue;
        }
        for (std::size_t pi = 0; pi < comp.size(); ++pi) {
            if (pi > 0) out << ',';
            const Endpoint& e = comp[pi];
            out << role_char(e.role) << e.chord << (d.sign(e.chord) > 0 ? '+' : '-');
        }
    }
    return out.str();
}

namespace {

// Token tuple used for the canonical-form comparison: ids compared numerically.
struct CanonToken {
    unsigned char role; // 0 = Over, 1 = Under
    int id;
    unsigned char neg; // 0 = '+', 1 = '-'

    bool operator<(const CanonToken& o) const {
        if (role != o.role) return role < o.role;
        if (id != o.id) return id < o.id;
        return neg < o.neg;
    }
    bool operator==(const CanonToken& o) const {
        return role == o.role && id == o.id && neg == o.neg;
    }
};

} // namespace

std::string canonical_code(const GaussDiagram& d) {
    const int nc = d.component_count();
    std::vector<int> sizes(static_cast<std::size_t>(nc));
    for (int ci = 0; ci < nc; ++ci) sizes[static_cast<std::size_t>(ci)] = static_cast<int>(d.component(ci).size());

    std::vector<std::vector<CanonToken>> best;
    std::vector<int> best_rot;
    std::vector<int> rot(static_cast<std::size_t>(nc), 0);

    auto build = [&](const std::vector<int>& r) {
        std::vector<std::vector<CanonToken>> out(static_cast<std::size_t>(nc));
        std::map<int, int> relabel;
        for (int ci = 0; ci < nc; ++ci) {
            const auto& comp = d.component(ci);
            const int k = sizes[static_cast<std::size_t>(ci)];
            auto& toks = out[static_cast<std::size_t>(ci)];
            toks.reserve(static_cast<std::size_t>(k));
            for (int off = 0; off < k; ++off) {
                const Endpoint& e =
                    comp[static_cast<std::size_t>((r[static_cast<std::size_t>(ci)] + off) % k)];
                auto it = relabel.find(e.chord);
                int id;
                if (it == relabel.end()) {
                    id = static_cast<int>(relabel.size()) + 1;
                    relabel.emplace(e.chord, id);
                } else {
                    id = it->second;
                }
                toks.push_back({static_cast<unsigned char>(e.role == Role::Under ? 1 : 0), id,
                                static_cast<unsigned char>(d.sign(e.chord) < 0 ? 1 : 0)});
            }
        }
        return out;
    };

    // Product over per-component rotations; diagrams this library manipulates are
    // small, so the plain product is fine.
    bool first = true;
    while (true) {
        auto cand = build(rot);
        if (first || cand < best) {
            best = cand;
            best_rot = rot;
            first = false;
        }
        int ci = 0;
        for (; ci < nc; ++ci) {
            int k = std::max(1, sizes[static_cast<std::size_t>(ci)]);
            if (++rot[static_cast<std::size_t>(ci)] < k) break;
            rot[static_cast<std::size_t>(ci)] = 0;
        }
        if (ci == nc) break;
    }

    if (d.component_count() == 1 && d.component(0).empty()) return "";
    std::ostringstream out;
    for (int ci = 0; ci < nc; ++ci) {
        if (ci > 0) out << '|';
        const auto& toks = best[static_cast<std::size_t>(ci)];
        if (toks.empty()) {
            out << '0';
            continue;
        }
        for (std::size_t pi = 0; pi < toks.size(); ++pi) {
            if (pi > 0) out << ',';
            out << (toks[pi].role ? 'U' : 'O') << toks[pi].id << (toks[pi].neg ? '-' : '+');
        }
    }
    return out.str();
}

bool is_self_chord(const GaussDiagram& d, int chord) {
    return d.is_self_chord(chord);
}

} // namespace vdelta

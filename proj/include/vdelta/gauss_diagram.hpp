#ifndef VDELTA_GAUSS_DIAGRAM_HPP
#define VDELTA_GAUSS_DIAGRAM_HPP

#include <map>
#include <string>
#include <vector>

namespace vdelta {

// Role of a chord endpoint at the crossing it records. Under this project's
// orientation convention a chord runs from its Over endpoint (initial) to its
// Under endpoint (terminal).
enum class Role : unsigned char { Over, Under };

inline Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }
inline char role_char(Role r) { return r == Role::Over ? 'O' : 'U'; }

struct Endpoint {
    int chord = 0;
    Role role = Role::Over;

    bool operator==(const Endpoint& other) const {
        return chord == other.chord && role == other.role;
    }
};

struct SlotRef {
    int component = 0; // 0-based
    int position = 0;  // 0-based slot within the component's circular order

    bool operator==(const SlotRef& other) const {
        return component == other.component && position == other.position;
    }
    bool operator<(const SlotRef& other) const {
        if (component != other.component) return component < other.component;
        return position < other.position;
    }
};

// A multi-component Gauss diagram: ordered circular sequences of chord endpoints
// plus a sign per chord. Component order is significant (links are ordered).
// Diagrams are plain values; every operation in this library takes diagrams by
// const reference and returns new ones.
class GaussDiagram {
public:
    using Component = std::vector<Endpoint>;

    GaussDiagram() = default;
    explicit GaussDiagram(int n_components);

    int component_count() const { return static_cast<int>(components_.size()); }
    const Component& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
    const std::vector<Component>& components() const { return components_; }

    int chord_count() const { return static_cast<int>(signs_.size()); }
    int endpoint_count() const;
    bool empty() const { return signs_.empty(); }

    bool has_chord(int id) const { return signs_.count(id) != 0; }
    int sign(int id) const;
    const std::map<int, int>& signs() const { return signs_; }
    int max_chord_id() const;

    // Locates the endpoint of a chord with the given role. Throws std::out_of_range
    // for unknown ids.
    SlotRef find(int chord, Role role) const;
    const Endpoint& at(SlotRef s) const;
    bool is_self_chord(int chord) const;

    // Builder-style mutators used by parsing, the families module and the move
    // engine. insert_endpoints places new endpoints starting at slot `gap`
    // (0 <= gap <= component size). They keep the diagram structurally valid only
    // once a chord's two endpoints are both present; validate() checks the result.
    void insert_endpoints(int component, int gap, const std::vector<Endpoint>& endpoints);
    void erase_chord(int id);
    void set_sign(int id, int sign);
    void set_endpoint(SlotRef s, Endpoint e);

    // Adds a fresh chord with the given sign; the Over endpoint is inserted at
    // (comp_over, gap_over) first, then the Under endpoint at (comp_under, gap_under)
    // evaluated against the diagram after the first insertion. Returns the new id.
    int add_chord(int sign, int comp_over, int gap_over, int comp_under, int gap_under);

    // Checks all structural invariants (each id appears exactly once per role with a
    // sign); throws std::invalid_argument on violation.
    void validate() const;

    bool operator==(const GaussDiagram& other) const {
        return components_ == other.components_ && signs_ == other.signs_;
    }
    bool operator!=(const GaussDiagram& other) const { return !(*this == other); }

private:
    std::vector<Component> components_;
    std::map<int, int> signs_;
};

// --- gauss-core operations -------------------------------------------------

GaussDiagram new_diagram(int n_components);

// Text format: token = ("O"|"U") id ("+"|"-"); tokens of a component joined by ",";
// components joined by "|"; an empty component is the literal "0"; whitespace is
// ignored on input. The empty single-component diagram serialises to "".
GaussDiagram parse_gauss_code(const std::string& text);
std::string serialize(const GaussDiagram& d);

// Lexicographically least serialization over all per-component basepoint rotations
// and chord relabelings (component order fixed). Token comparison treats ids
// numerically, so the result is stable for diagrams with 10+ chords too.
std::string canonical_code(const GaussDiagram& d);

bool is_self_chord(const GaussDiagram& d, int chord);

} // namespace vdelta

#endif

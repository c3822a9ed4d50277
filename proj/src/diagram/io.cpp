#include "tqft/diagram/io.hpp"

#include <algorithm>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

int parse_label(const json& j, const PremodularData* c) {
    if (j.is_number_integer()) {
        int i = j.get<int>();
        if (i < 0 || (c && i >= c->size())) throw ParseError("label index out of range: " + j.dump());
        return i;
    }
    if (j.is_string()) {
        if (!c) throw ParseError("label name " + j.dump() + " needs a category");
        int i = c->label_index(j.get<std::string>());
        if (i < 0) throw ParseError("unknown label " + j.dump());
        return i;
    }
    throw ParseError("bad label " + j.dump());
}

std::string label_name(int ref, const PremodularData* c, const SlicedDiagram& d) {
    if (is_slot(ref)) return d.slot_names.at(slot_index(ref));
    if (c) return c->labels.at(ref);
    return std::to_string(ref);
}

int component_slot(SlicedDiagram& d, const json& j) {
    std::string name = j.is_string() ? j.get<std::string>() : j.dump();
    auto it = std::find(d.slot_names.begin(), d.slot_names.end(), name);
    if (it != d.slot_names.end()) return slot_ref(static_cast<int>(it - d.slot_names.begin()));
    d.slot_names.push_back(name);
    return slot_ref(static_cast<int>(d.slot_names.size()) - 1);
}

bool parse_orient(const json& j) {
    if (j == "up") return true;
    if (j == "down") return false;
    throw ParseError("orientation must be \"up\" or \"down\", got " + j.dump());
}

const std::pair<const char*, GenKind> kKinds[] = {
    {"id", GenKind::Id},         {"cup", GenKind::Cup},           {"cap", GenKind::Cap},
    {"cross_over", GenKind::CrossOver}, {"cross_under", GenKind::CrossUnder}, {"twist", GenKind::Twist},
    {"twist_pos", GenKind::Twist}, {"fuse", GenKind::Fuse},       {"split", GenKind::Split},
};

}  // namespace

SlicedDiagram diagram_from_json(const json& j, const PremodularData* c) {
    if (!j.is_object()) throw ParseError("diagram document must be an object");
    SlicedDiagram d;
    try {
        for (const auto& nm : j.value("components", json::array())) component_slot(d, nm);
        for (const auto& s : j.value("top", json::array())) {
            if (!s.is_array() || s.size() != 2) throw ParseError("top entries are [label, \"up\"|\"down\"]");
            int ref = s[0].is_object() && s[0].contains("component") ? component_slot(d, s[0]["component"]) : parse_label(s[0], c);
            d.top.push_back({ref, parse_orient(s[1])});
        }
        if (!j.contains("slices") || !j["slices"].is_array()) throw ParseError("diagram needs a 'slices' list");
        for (const auto& sl : j["slices"]) {
            if (!sl.is_array()) throw ParseError("each slice is a list of generators");
            Slice slice;
            for (const auto& gj : sl) {
                if (!gj.is_object() || !gj.contains("gen")) throw ParseError("generator needs a 'gen' field");
                Generator g;
                std::string kind = gj["gen"].get<std::string>();
                bool found = false;
                for (const auto& [nm, k] : kKinds)
                    if (kind == nm) {
                        g.kind = k;
                        found = true;
                    }
                if (!found) throw ParseError("unknown generator '" + kind + "'");
                g.pos = gj.value("pos", 0);
                if (gj.contains("component"))
                    g.label = component_slot(d, gj["component"]);
                else if (gj.contains("label"))
                    g.label = parse_label(gj["label"], c);
                if (gj.contains("orient")) g.orient = parse_orient(gj["orient"]) ? 1 : 0;
                if (g.kind == GenKind::Cup && g.orient < 0) g.orient = 0;
                g.sign = gj.value("sign", 1);
                if (g.kind == GenKind::Fuse || g.kind == GenKind::Split) {
                    for (const char* key : {"a", "b", "c"})
                        if (!gj.contains(key)) throw ParseError(kind + " needs labels a, b, c");
                    g.a = parse_label(gj["a"], c);
                    g.b = parse_label(gj["b"], c);
                    g.c = parse_label(gj["c"], c);
                }
                slice.push_back(g);
            }
            d.slices.push_back(std::move(slice));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed diagram: ") + e.what());
    }
    return d;
}

json diagram_to_json(const SlicedDiagram& d, const PremodularData* c) {
    json j;
    if (!d.slot_names.empty()) j["components"] = d.slot_names;
    json top = json::array();
    for (const auto& s : d.top) {
        json l = is_slot(s.label) ? json{{"component", label_name(s.label, c, d)}} : json(label_name(s.label, c, d));
        top.push_back({l, s.up ? "up" : "down"});
    }
    j["top"] = top;
    json slices = json::array();
    for (const auto& sl : d.slices) {
        json js = json::array();
        for (const auto& g : sl) {
            json gj;
            for (const auto& [nm, k] : kKinds)
                if (k == g.kind && std::string(nm) != "twist_pos") {
                    gj["gen"] = nm;
                    break;
                }
            gj["pos"] = g.pos;
            if (g.label != kAnyLabel) {
                if (is_slot(g.label))
                    gj["component"] = label_name(g.label, c, d);
                else
                    gj["label"] = label_name(g.label, c, d);
            }
            if (g.orient >= 0) gj["orient"] = g.orient == 1 ? "up" : "down";
            if (g.kind == GenKind::Twist) gj["sign"] = g.sign;
            if (g.kind == GenKind::Fuse || g.kind == GenKind::Split) {
                gj["a"] = label_name(g.a, c, d);
                gj["b"] = label_name(g.b, c, d);
                gj["c"] = label_name(g.c, c, d);
            }
            js.push_back(gj);
        }
        slices.push_back(js);
    }
    j["slices"] = slices;
    return j;
}

}  // namespace tqft

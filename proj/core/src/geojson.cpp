#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "choreme/map_model.hpp"

namespace choreme {

namespace {

using nlohmann::json;

Ring parse_ring(const json& coords) {
    if (!coords.is_array()) throw MapError("ring coordinates must be an array");
    Ring ring;
    ring.reserve(coords.size());
    for (const json& c : coords) {
        if (!c.is_array() || c.size() < 2 || !c[0].is_number() || !c[1].is_number())
            throw MapError("position must be an array of two numbers");
        const Point p{c[0].get<double>(), c[1].get<double>()};
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw MapError("non-finite coordinate");
        ring.push_back(p);
    }
    return ring;
}

PolygonWithHoles parse_polygon(const json& rings) {
    if (!rings.is_array() || rings.empty()) throw MapError("polygon needs at least one ring");
    PolygonWithHoles p;
    p.outer = parse_ring(rings[0]);
    for (std::size_t i = 1; i < rings.size(); ++i) p.holes.push_back(parse_ring(rings[i]));
    return p;
}

MultiPolygon parse_geometry(const json& geometry) {
    if (!geometry.is_object()) throw MapError("feature without geometry");
    const std::string type = geometry.value("type", "");
    const json& coords = geometry.at("coordinates");
    if (type == "Polygon") return {parse_polygon(coords)};
    if (type == "MultiPolygon") {
        MultiPolygon mp;
        for (const json& poly : coords) mp.push_back(parse_polygon(poly));
        return mp;
    }
    throw MapError("unsupported geometry type '" + type + "'");
}

ClassId parse_class(const json& v, const std::string& field) {
    if (v.is_number_integer()) return class_from_int(v.get<long long>());
    if (v.is_number()) {
        const double d = v.get<double>();
        if (d == 1.0 || d == 2.0) return class_from_int(static_cast<long long>(d));
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "1") return ClassId::first;
        if (s == "2") return ClassId::second;
    }
    throw MapError("property '" + field + "' must be 1 or 2");
}

double parse_value(const json& v, const std::string& field) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        try {
            std::size_t used = 0;
            const auto s = v.get<std::string>();
            const double d = std::stod(s, &used);
            if (used == s.size()) return d;
        } catch (const std::exception&) {
        }
    }
    throw MapError("property '" + field + "' must be numeric");
}

}  // namespace

RegionMap load_map(std::string_view geojson, const ClassSource& source) {
    json doc;
    try {
        doc = json::parse(geojson);
    } catch (const json::parse_error& e) {
        throw MapError(std::string("GeoJSON parse error: ") + e.what());
    }
    if (!doc.is_object() || doc.value("type", "") != "FeatureCollection")
        throw MapError("expected a GeoJSON FeatureCollection");
    const json& features = doc.contains("features") ? doc["features"] : json::array();
    if (!features.is_array()) throw MapError("'features' must be an array");

    std::vector<Region> regions;
    std::vector<double> values;
    try {
        for (const json& f : features) {
            Region region;
            region.shape = parse_geometry(f.at("geometry"));
            const json& props = f.contains("properties") ? f["properties"] : json::object();
            if (!props.is_object() || !props.contains(source.field))
                throw MapError("feature is missing property '" + source.field + "'");
            if (source.kind == ClassSource::Kind::class_field)
                region.class_id = parse_class(props[source.field], source.field);
            else
                values.push_back(parse_value(props[source.field], source.field));
            regions.push_back(std::move(region));
        }
    } catch (const json::exception& e) {
        throw MapError(std::string("malformed GeoJSON feature: ") + e.what());
    }
    if (regions.empty()) throw MapError("no regions");

    if (source.kind == ClassSource::Kind::value_field) {
        const auto classes = classify_two(values);
        for (std::size_t i = 0; i < regions.size(); ++i) regions[i].class_id = classes[i];
    }

    std::string crs;
    if (doc.contains("crs")) crs = doc["crs"].dump();
    return RegionMap::create(std::move(regions), std::move(crs));
}

RegionMap load_map_file(const std::string& path, const ClassSource& source) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MapError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_map(buf.str(), source);
}

}  // namespace choreme

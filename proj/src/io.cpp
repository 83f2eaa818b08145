#include "homcat/io.hpp"

#include <filesystem>
#include <fstream>

namespace homcat {

namespace {

Field field_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") return Field::prime(j.at("p").get<unsigned long>());
    throw MalformedInput("unknown field kind '" + kind + "'");
}

Mat mat_from_json(const Field& f, const Json& j, int rows, int cols) {
    if (static_cast<int>(j.size()) != rows)
        throw MalformedInput("matrix has " + std::to_string(j.size()) + " rows, expected " +
                             std::to_string(rows));
    Mat m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        if (static_cast<int>(row.size()) != cols)
            throw MalformedInput("matrix row has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(cols));
        for (int c = 0; c < cols; ++c) m.set(i, c, f.parse(row.at(c).get<std::string>()));
    }
    return m;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw MalformedInput("cannot parse '" + path + "': " + e.what());
    }
}

PresPtr presentation_from_json(const Json& j) {
    try {
        auto p = std::make_shared<Presentation>();
        p->field = field_from_json(j.at("field"));
        for (const auto& obj : j.at("objects"))
            p->indec.push_back({obj.at("label").get<std::string>(), obj.at("dim").get<int>()});
        for (const auto& hom : j.value("homs", Json::array())) {
            std::string src = hom.at("src").get<std::string>();
            std::string tgt = hom.at("tgt").get<std::string>();
            if (!p->has_object(src) || !p->has_object(tgt))
                throw MalformedInput("hom references unknown object '" + src + "'/'" + tgt + "'");
            auto& basis = p->hom_basis[{src, tgt}];
            for (const auto& b : hom.at("basis"))
                basis.push_back(HomBasisElem{b.at("label").get<std::string>(),
                                             mat_from_json(p->field, b.at("matrix"),
                                                           p->dim_of(tgt), p->dim_of(src))});
        }
        return p;
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("malformed presentation: ") + e.what());
    }
}

PresPtr load_presentation_file(const std::string& path) {
    return presentation_from_json(load_json_file(path));
}

Complex complex_from_json(const Json& j, const PresPtr& p) {
    try {
        std::map<int, Obj> comps;
        for (const auto& [deg, labels] : j.at("components").items()) {
            Obj o;
            for (const auto& l : labels) {
                std::string label = l.get<std::string>();
                if (!p->has_object(label))
                    throw MalformedInput("unknown summand '" + label + "'");
                o.summands.push_back(label);
            }
            comps[std::stoi(deg)] = std::move(o);
        }
        std::map<int, Mor> diffs;
        // Keep the defaulted object alive: items() on a temporary dangles.
        Json diff_entries = j.value("differentials", Json::object());
        for (const auto& [deg, mat] : diff_entries.items()) {
            int n = std::stoi(deg);
            if (!comps.count(n) || !comps.count(n + 1))
                throw MalformedInput("differential at degree " + deg + " without components");
            const Obj& src = comps.at(n);
            const Obj& tgt = comps.at(n + 1);
            diffs[n] = Mor{p, src, tgt, mat_from_json(p->field, mat, tgt.dim(*p), src.dim(*p))};
        }
        return Complex(p, std::move(comps), std::move(diffs));
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("malformed complex: ") + e.what());
    }
}

Complex load_complex_file(const std::string& path) {
    Json j = load_json_file(path);
    std::string pres_path;
    try {
        pres_path = j.at("presentation").get<std::string>();
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("malformed complex: ") + e.what());
    }
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    PresPtr p = load_presentation_file((base / pres_path).string());
    return complex_from_json(j, p);
}

}  // namespace homcat

// Fixture search: scan the rational points of bounded height on a cubic
// surface, classify each tangent section, and print one row per point. The
// pinned witnesses in the fixture corpus were found by exactly this scan, so
// rerunning it reproduces them.
#include "delpezzo/model_io.hpp"
#include "delpezzo/surface.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

using namespace delpezzo;

int main(int argc, char** argv) {
    CLI::App app{"scan low-height rational points of a cubic surface for tangent-section "
                 "witnesses"};
    std::string surface_path;
    long height = 2;
    std::string only_case;
    app.add_option("--surface", surface_path, "surface description file")->required();
    app.add_option("--height", height, "coordinate bound, default 2");
    app.add_option("--case", only_case, "print only points with this tangent case (a..f)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        SurfaceDescription desc = parse_surface_description(read_text_file(surface_path));
        CubicSurface s(desc.form);
        std::cout << "surface: " << desc.form.str(desc.variables) << " = 0\n";
        std::cout << "height bound: " << height << "\n";
        std::cout << "point | case | germ | lct | alpha | components\n";

        std::map<std::string, long> census;
        long printed = 0;
        for (const SurfacePoint& p : scan_cubic_points(s, height)) {
            TangentSectionReport rep = tangent_section(s, p);
            std::string case_name = tangent_case_name(rep.tangent_case);
            ++census[case_name];
            if (!only_case.empty() && case_name != only_case) continue;
            AlphaResult alpha = alpha_at_cubic_point(s, p);
            std::string comps;
            for (const auto& c : rep.components) {
                if (!comps.empty()) comps += ", ";
                comps += c.kind;
                if (c.through_point) comps += " (through)";
            }
            std::cout << p.str() << " | " << case_name << " | "
                      << germ_type_name(rep.local_type.type) << " | "
                      << rep.lct_at_point.str() << " | " << alpha.value.str() << " | "
                      << comps << "\n";
            ++printed;
        }
        std::cout << "census:";
        for (const auto& [name, count] : census) std::cout << " " << name << "=" << count;
        std::cout << "\n";
        std::cout << "rows printed: " << printed << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include "redalg/presentation_io.hpp"

#include <sstream>
#include <stdexcept>

#include "redalg/expr.hpp"

namespace redalg {

std::string write_presentation(const Presentation& p) {
    std::ostringstream out;
    for (const Generator& g : p.generators())
        out << "generator " << g.name << " weight " << g.weight << "\n";
    for (const RewriteRule& r : p.rules())
        out << "rule " << r.lhs_first.name << " " << r.lhs_second.name
            << " -> " << render(r.rhs) << "\n";
    return out.str();
}

Presentation read_presentation(const std::string& text) {
    std::vector<Generator> gens;
    struct PendingRule {
        std::string first, second, rhs;
    };
    std::vector<PendingRule> pending;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword) || keyword[0] == '#') continue;
        if (keyword == "generator") {
            std::string name, weight_kw;
            int weight = 0;
            if (!(ls >> name >> weight_kw >> weight) ||
                weight_kw != "weight")
                throw std::invalid_argument(
                    "malformed generator directive at line " +
                    std::to_string(lineno));
            gens.push_back({name, weight});
        } else if (keyword == "rule") {
            std::string first, second, arrow;
            if (!(ls >> first >> second >> arrow) || arrow != "->")
                throw std::invalid_argument("malformed rule directive at line " +
                                            std::to_string(lineno));
            std::string rhs;
            std::getline(ls, rhs);
            pending.push_back({first, second, rhs});
        } else {
            throw std::invalid_argument("unknown directive '" + keyword +
                                        "' at line " + std::to_string(lineno));
        }
    }

    auto find = [&gens](const std::string& name) -> const Generator& {
        for (const Generator& g : gens)
            if (g.name == name) return g;
        throw std::invalid_argument("rule names unknown generator: " + name);
    };

    std::vector<RewriteRule> rules;
    for (const PendingRule& pr : pending)
        rules.push_back(
            {find(pr.first), find(pr.second), parse_element(pr.rhs, gens)});
    return Presentation(std::move(gens), std::move(rules));
}

}  // namespace redalg

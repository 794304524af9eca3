#pragma once

#include <torsur/catalog.hpp>
#include <torsur/surgery.hpp>

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <utility>
#include <vector>

namespace torsur {

struct NamedSurgery {
    SurgerySpec spec;
    std::string framing;
};

// Parsed form of the JSON instance file.
struct InstanceDocument {
    ComplementPresentation complement;
    std::vector<std::pair<std::string, Framing>> framings;
    std::vector<NamedSurgery> surgeries;

    const Framing& framing(const std::string& name) const;
};

// Integers round-trip as JSON numbers while they fit in 53 bits and as
// decimal strings beyond that, so consumers never lose precision.
nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j, const std::string& field);

// Throws Error(parse) on schema problems, and lets the module-level
// invariant errors from construction propagate.
InstanceDocument parse_instance(const nlohmann::json& j);
InstanceDocument parse_instance_text(const std::string& text);

nlohmann::json instance_to_json(const InstanceDocument& doc);

InstanceDocument entry_to_instance(const CatalogEntry& entry);

}  // namespace torsur

#include "surfdeform/schedule.hpp"

#include <ostream>
#include <sstream>

namespace surfdeform {

const char* instruction_name(InstructionName n) {
    switch (n) {
        case InstructionName::DataQ_RM: return "DataQ_RM";
        case InstructionName::SyndromeQ_RM: return "SyndromeQ_RM";
        case InstructionName::PatchQ_RM: return "PatchQ_RM";
        case InstructionName::PatchQ_ADD: return "PatchQ_ADD";
        default: return "Atomic";
    }
}

std::string Step::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::S2G: {
            os << "S2G " << op.str() << " | demoted:";
            if (demoted.empty()) os << " none";
            for (std::size_t i = 0; i < demoted.size(); ++i)
                os << (i ? ", " : " ") << demoted[i].str();
            break;
        }
        case Kind::G2S:
            os << "G2S " << op.str() << " | outcome: " << (outcome < 0 ? "-1" : "+1");
            if (!op2.is_identity()) os << " | byproduct: " << op2.str();
            break;
        case Kind::S2S:
            os << "S2S " << op.str() << " * " << op2.str() << (replace ? " | replace" : " | append");
            break;
        case Kind::G2G:
            os << "G2G " << op.str() << " * " << op2.str();
            break;
        case Kind::AddQubit:
            os << "ADDQ " << site.str() << " " << (basis == '+' ? "|+>" : "|0>");
            break;
        case Kind::AddSyndrome:
            os << "ADDS " << site.str() << " " << check_char(ctype);
            break;
        case Kind::RetireStab:
            os << "RETIRE_STAB " << op.str();
            break;
        case Kind::RetireGauge:
            os << "RETIRE_GAUGE " << op.str();
            break;
        case Kind::RetireSyndrome:
            os << "RETIRE_SYN " << site.str();
            break;
        case Kind::Disable:
            os << "DISABLE " << site.str();
            break;
        case Kind::SetBoundary: {
            os << "BOUNDARY " << side_name(side) << " [";
            for (std::size_t i = 0; i < coords.size(); ++i)
                os << (i ? " " : "") << coords[i].str();
            os << "]";
            break;
        }
    }
    return os.str();
}

std::string CompositeInstruction::header() const {
    std::string h = instruction_name(name);
    if (!args.empty()) h += " " + args;
    return h;
}

std::size_t DeformationSchedule::step_count() const {
    std::size_t c = 0;
    for (const auto& in : instructions) c += in.expansion.size();
    return c;
}

void DeformationSchedule::write_log(std::ostream& os) const {
    for (const auto& in : instructions) {
        os << "# " << in.header() << "\n";
        for (const auto& s : in.expansion) os << s.str() << "\n";
    }
}

}  // namespace surfdeform

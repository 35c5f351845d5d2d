#include "lsdeg/degeneration.hpp"

namespace lsdeg {

const std::vector<WitnessRecord>& witness_records() {
    static const std::vector<WitnessRecord> records = {
        {"orbit", R"(witness LS19 -> LS4
uses_sqrt true
x1 = t e1
x2 = 2t e2
y1 = sqrt(t) f1
y2 = sqrt(t) f2
)"},
        {"orbit", R"(witness LS19 -> LS12
uses_sqrt true
x1 = 2t e2
x2 = t e1
y1 = t sqrt(t) f1
y2 = sqrt(t) f2
)"},
        {"orbit", R"(witness LS19 -> LS18[-1]
x1 = e1
x2 = e2
y1 = t f1
y2 = t f2
)"},
        {"orbit", R"(witness LS19 -> LS14[0]
x1 = t e1
x2 = e2
y1 = t f2
y2 = f1
)"},
        {"orbit", R"(witness LS1 -> LS4
uses_sqrt true
x1 = -sqrt(t) e1 + sqrt(t) e2
x2 = e1 + e2
y1 = -sqrt(t) f1 + sqrt(t) f2
y2 = f1 + f2
)"},
        {"orbit", R"(witness LS5 -> LS9
x1 = e1 + e2
x2 = t e1
y1 = t f1
y2 = f1 + f2
)"},
        {"orbit", R"(witness LS5 -> LS6[a]
x1 = t e1
x2 = e1 + a e2
y1 = f1
y2 = f2
)"},
        {"orbit", R"(witness LS4 -> LS2
x1 = e1
x2 = t(t-1) e1 + t e2
y1 = -i/(2t) f1 + i t f2
y2 = 1/(2t) f1 + t f2
)"},
        {"orbit", R"(witness LS7 -> LS2
x1 = e1
x2 = t e2
y1 = -i/2 f1 + i f2
y2 = 1/2 f1 + f2
)"},
        {"orbit", R"(witness LS7 -> LS6[-1]
x1 = 1/t e1
x2 = e2
y1 = f1
y2 = f2
)"},
        {"orbit", R"(witness LS7 -> LS12
x1 = e1
x2 = t e2
y1 = f1
y2 = 1/(2t) f1 + t f2
)"},
        {"orbit", R"(witness LS8 -> LS6[0]
x1 = e1
x2 = e2
y1 = f1
y2 = t f2
)"},
        {"orbit", R"(witness LS8 -> LS12
x1 = e1
x2 = t e2
y1 = f1
y2 = 1/t f1 + f2
)"},
        {"orbit", R"(witness LS9 -> LS10
x1 = t e1
x2 = e1 + e2
y1 = f1
y2 = f2
)"},
        {"orbit", R"(witness LS14[a] -> LS13[a,-a-1]
x1 = 1/t e1
x2 = e2
y1 = f1
y2 = f2
)"},
        {"orbit", R"(witness LS14[a] -> LS2
x1 = e1
x2 = t e2
y1 = -i f1 + i/2 f2
y2 = f1 + 1/2 f2
)"},
        {"orbit", R"(witness LS15[a] -> LS12
x1 = e1
x2 = t e2
y1 = f1
y2 = 2/(t(2a+1)) f1 + f2
)"},
        {"orbit", R"(witness LS15[a] -> LS13[a,-1/2]
x1 = 1/t e1
x2 = e2
y1 = f1
y2 = f2
)"},
        {"orbit", R"(witness LS14[-1/2] -> LS15[-1/2]
x1 = e1
x2 = e2
y1 = t f1
y2 = 1/2 f1 + f2
)"},
        {"orbit", R"(witness LS17 -> LS12
x1 = t^2 e1
x2 = t e2
y1 = t^2 f1
y2 = t f2
)"},
        {"orbit", R"(witness LS17 -> LS16[-1/2]
x1 = 1/t e1
x2 = e2
y1 = f1
y2 = f2
)"},
        {"orbit", R"(witness LS17 -> LS15[-1/2]
x1 = e1
x2 = e2
y1 = 1/t f1
y2 = f2
)"},
        {"orbit", R"(witness LS18[a] -> LS13[a,a+1]
x1 = e1
x2 = e2
y1 = 1/t f1
y2 = f2
)"},
        {"orbit", R"(witness LS2 -> LS3
x1 = e1
x2 = e2
y1 = f1
y2 = t f2
)"},
        {"orbit", R"(witness LS6[a] -> LS11
x1 = 1/t e1
x2 = -t e2
y1 = t f2
y2 = f1 - 1/(a-1) f2
)"},
        {"orbit", R"(witness LS10 -> LS11
x1 = e1
x2 = t e2
y1 = f1
y2 = 1/t f2
)"},
        {"orbit", R"(witness LS10 -> LS6[1]
x1 = e1
x2 = e2
y1 = 1/t f1
y2 = f2
)"},
        {"orbit", R"(witness LS12 -> LS11
x1 = 1/t e1
x2 = e2
y1 = f1
y2 = f2
)"},
        {"orbit", R"(witness LS12 -> LS3
x1 = e1
x2 = t e2
y1 = f2
y2 = f1
)"},
        {"orbit", R"(witness LS13[a,b] -> LS11
x1 = 1/t e1
x2 = -t e2
y1 = t f2
y2 = f1 + 1/(a-b) f2
)"},
        {"orbit", R"(witness LS16[a] -> LS11
x1 = e1
x2 = t e2
y1 = f1
y2 = 1/t f2
)"},
        {"orbit", R"(witness LS16[a] -> LS13[a,a]
x1 = e1
x2 = e2
y1 = 1/t f1
y2 = f2
)"},
        {"orbit", R"(witness LS15[-1/2] -> LS3
x1 = e1
x2 = t e2
y1 = f2
y2 = f1
)"},
        {"orbit", R"(witness LS15[-1/2] -> LS13[-1/2,-1/2]
x1 = 1/t e1
x2 = e2
y1 = f1
y2 = f2
)"},
        {"refuted", R"(witness LS8 -> LS2
x1 = e1
x2 = t e2
y1 = f1 + f2
y2 = f2
)"},
        {"refuted", R"(witness LS17 -> LS10
x1 = e1
x2 = t e2
y1 = f1 + f2
y2 = f2
)"},
        {"family", R"(witness LS14[a] -> LS17
uses_sqrt true
bind a = -1/2 - i sqrt(t)
x1 = e1
x2 = e2
y1 = -i sqrt(t) f1
y2 = 1/2 f1 + f2
)"},
        {"family", R"(witness LS14[a] -> LS7
bind a = -1/t
x1 = e1
x2 = -t e2
y1 = f1
y2 = f2
)"},
        {"family", R"(witness LS15[a] -> LS8
bind a = -1/(2t)
x1 = e1
x2 = -2t e2
y1 = f1
y2 = f2
)"},
        {"family", R"(witness LS18[a] -> LS9
bind a = -(1+t)/t
x1 = -t e2
x2 = e1
y1 = f1
y2 = f2
)"},
        {"family", R"(witness LS13[a,b] -> LS6[g]
bind a = 1/t
bind b = g/t
x1 = e1
x2 = t e2
y1 = f1
y2 = f2
)"},
        {"family", R"(witness LS13[a,b] -> LS16[g]
uses_sqrt true
bind a = (g + sqrt(t))/(1+t)
bind b = (g - sqrt(t))/(1+t)
x1 = e1
x2 = e2
y1 = 2 sqrt(t) f1
y2 = f1 + f2
)"},
        {"iso", R"(witness LS13[a,b] -> LS13[b,a]
x1 = e1
x2 = e2
y1 = f2
y2 = f1
)"},
        {"iso", R"(witness LS14[a] -> LS14[-a-1]
x1 = e1
x2 = e2
y1 = f2
y2 = f1
)"},
        {"iso", R"(witness LS6[a] -> LS6[1/a]
x1 = e1
x2 = 1/a e2
y1 = f2
y2 = f1
)"},
    };
    return records;
}

std::vector<Witness> builtin_witnesses(const std::string& group) {
    std::vector<Witness> out;
    for (const auto& r : witness_records())
        if (group.empty() || group == r.group) out.push_back(parse_witness(r.text));
    return out;
}

}  // namespace lsdeg

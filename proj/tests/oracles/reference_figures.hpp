#pragma once

// Vertex lists of the reference approximating-polygon and quadrant-tessellation
// figures, transcribed from their TikZ source with collinear vertices already merged
// by the drawing. Coordinates are in figure units: the figure shows level k of the
// curve scaled by `scale` and shifted right by `shift`.

#include <array>
#include <vector>

namespace fibcurve::oracle {

inline constexpr double kPhi = 1.6180339887498948482;

struct FigurePolyline {
    const char* name;
    int level;
    double scale;
    double shift;
    std::vector<std::array<double, 2>> points;
};

inline const std::vector<FigurePolyline>& figure_polylines() {
    static const std::vector<FigurePolyline> figures = {
        {"polygon_k1", 1, 6.0, 0.0, {
             {1.8541409147095178, 1.8541409147095178}, {1.8541409147095178, 4.854140914709518}, {4.854140914709518, 4.854140914709518},
             {4.854140914709518, 1.8541409147095178}
         }},
        {"polygon_k2", 2, 6.0, 10.0, {
             {11.145912910618794, 1.145912910618793}, {13.000053825328312, 1.145912910618793}, {13.000053825328312, 3.000053825328311},
             {11.145912910618794, 3.000053825328311}, {11.145912910618794, 4.854194740037829}, {14.85419474003783, 4.854194740037829},
             {14.85419474003783, 1.145912910618793}
         }},
        {"polygon_k3", 3, 6.0, 20.0, {
             {20.708215297450426, 0.708215297450425}, {20.708215297450426, 1.854128208069218}, {21.85412820806922, 1.854128208069218},
             {21.85412820806922, 0.708215297450425}, {23.000041118688014, 0.708215297450425}, {23.000041118688014, 3.000041118688011},
             {20.708215297450426, 3.000041118688011}, {20.708215297450426, 5.562384624207653}, {21.85412820806922, 5.562384624207653},
             {21.85412820806922, 4.4164717135888605}, {23.000041118688014, 4.4164717135888605}, {23.000041118688014, 5.562384624207653},
             {25.562384624207656, 5.562384624207653}, {25.562384624207656, 4.4164717135888605}, {24.416471713588862, 4.4164717135888605},
             {24.416471713588862, 3.000041118688011}, {25.562384624207656, 3.000041118688011}, {25.562384624207656, 1.854128208069218},
             {24.416471713588862, 1.854128208069218}, {24.416471713588862, 0.708215297450425}, {25.562384624207656, 0.708215297450425}
         }},
        {"polygon_k4", 4, 5.0 * kPhi + 3.0, 10.0, {
             {10.809016994375, 0.809016994375}, {12.11803398875, 0.809016994375}, {12.11803398875, 2.1180339887499997},
             {10.809016994375, 2.1180339887499997}, {10.809016994375, 3.427050983125}, {13.427050983125, 3.427050983125},
             {13.427050983125, 0.809016994375}, {16.35410196625, 0.809016994375}, {16.35410196625, 2.1180339887499997},
             {15.045084971875, 2.1180339887499997}, {15.045084971875, 3.427050983125}, {16.35410196625, 3.427050983125},
             {16.35410196625, 6.35410196625}, {15.045084971875, 6.35410196625}, {15.045084971875, 5.045084971875},
             {13.427050983125, 5.045084971875}, {13.427050983125, 6.35410196625}, {12.11803398875, 6.35410196625},
             {12.11803398875, 5.045084971875}, {10.809016994375, 5.045084971875}, {10.809016994375, 7.663118960625},
             {12.11803398875, 7.663118960625}, {12.11803398875, 8.972135954999999}, {10.809016994375, 8.972135954999999},
             {10.809016994375, 10.281152949374999}, {10.809016994375, 10.281152949374999}, {13.427050983125, 10.281152949374999},
             {13.427050983125, 7.663118960625}, {16.35410196625, 7.663118960625}, {16.35410196625, 8.972135954999999},
             {15.045084971875, 8.972135954999999}, {15.045084971875, 10.281152949374999}, {20.281152949375, 10.281152949374999},
             {20.281152949375, 7.663118960625}, {18.972135955, 7.663118960625}, {18.972135955, 8.972135954999999},
             {17.663118960625, 8.972135954999999}, {17.663118960625, 5.045084971875}, {18.972135955, 5.045084971875},
             {18.972135955, 6.35410196625}, {20.281152949375, 6.35410196625}, {20.281152949375, 3.427050983125},
             {17.663118960625, 3.427050983125}, {17.663118960625, 0.809016994375}, {18.972135955, 0.809016994375},
             {18.972135955, 2.1180339887499997}, {20.281152949375, 2.1180339887499997}, {20.281152949375, 0.809016994375}
         }},
        {"tessellation_m1", 2, 2.0 * kPhi + 1.0, 3.2, {
             {4.009016994375, 0.809016994375}, {5.31803398875, 0.809016994375}, {5.31803398875, 2.1180339887499997},
             {4.009016994375, 2.1180339887499997}, {4.009016994375, 3.427050983125}, {6.627050983125, 3.427050983125},
             {6.627050983125, 0.809016994375}
         }},
        {"tessellation_m2", 4, 5.0 * kPhi + 3.0, 10.0, {
             {10.809016994375, 0.809016994375}, {12.11803398875, 0.809016994375}, {12.11803398875, 2.1180339887499997},
             {10.809016994375, 2.1180339887499997}, {10.809016994375, 3.427050983125}, {13.427050983125, 3.427050983125},
             {13.427050983125, 0.809016994375}, {16.35410196625, 0.809016994375}, {16.35410196625, 2.1180339887499997},
             {15.045084971875, 2.1180339887499997}, {15.045084971875, 3.427050983125}, {16.35410196625, 3.427050983125},
             {16.35410196625, 6.35410196625}, {15.045084971875, 6.35410196625}, {15.045084971875, 5.045084971875},
             {13.427050983125, 5.045084971875}, {13.427050983125, 6.35410196625}, {12.11803398875, 6.35410196625},
             {12.11803398875, 5.045084971875}, {10.809016994375, 5.045084971875}, {10.809016994375, 7.663118960625},
             {12.11803398875, 7.663118960625}, {12.11803398875, 8.972135954999999}, {10.809016994375, 8.972135954999999},
             {10.809016994375, 10.281152949374999}, {10.809016994375, 10.281152949374999}, {13.427050983125, 10.281152949374999},
             {13.427050983125, 7.663118960625}, {16.35410196625, 7.663118960625}, {16.35410196625, 8.972135954999999},
             {15.045084971875, 8.972135954999999}, {15.045084971875, 10.281152949374999}, {20.281152949375, 10.281152949374999},
             {20.281152949375, 7.663118960625}, {18.972135955, 7.663118960625}, {18.972135955, 8.972135954999999},
             {17.663118960625, 8.972135954999999}, {17.663118960625, 5.045084971875}, {18.972135955, 5.045084971875},
             {18.972135955, 6.35410196625}, {20.281152949375, 6.35410196625}, {20.281152949375, 3.427050983125},
             {17.663118960625, 3.427050983125}, {17.663118960625, 0.809016994375}, {18.972135955, 0.809016994375},
             {18.972135955, 2.1180339887499997}, {20.281152949375, 2.1180339887499997}, {20.281152949375, 0.809016994375}
         }},
    };
    return figures;
}

}  // namespace fibcurve::oracle

#pragma once

#include <string>

#include "follownav/engine.hpp"
#include "follownav/scene.hpp"

namespace follownav {

// Renders a run as a standalone SVG: one <polyline> per agent plus one for
// the robot (exactly agent count + 1 in total), each stroked with a
// start-to-end gradient so color encodes time; sampled leader highlights
// (circles) and subgoal markers (crosses) along the way. Obstacles and the
// goal are drawn when a scene is supplied. Output depends only on the
// inputs — identical records render byte-identical files.
std::string render_svg(const RunRecord& record, const Scene* scene = nullptr);

}  // namespace follownav

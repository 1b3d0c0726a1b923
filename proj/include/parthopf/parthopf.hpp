#pragma once

#include "parthopf/core/error.hpp"
#include "parthopf/core/linalg.hpp"
#include "parthopf/core/matrix.hpp"
#include "parthopf/core/report.hpp"
#include "parthopf/core/scalar.hpp"
#include "parthopf/core/tensor.hpp"
#include "parthopf/group/finite_group.hpp"
#include "parthopf/hopf/algebra.hpp"
#include "parthopf/hopf/hopf_algebra.hpp"
#include "parthopf/lincat/semicategory.hpp"
#include "parthopf/lincat/morita.hpp"
#include "parthopf/action/partial_action.hpp"
#include "parthopf/action/group_actions.hpp"
#include "parthopf/action/sweedler.hpp"
#include "parthopf/catalog.hpp"
#include "parthopf/global/globalization.hpp"
#include "parthopf/smash/smash.hpp"
#include "parthopf/pipeline.hpp"

#ifndef WINRULE_WINRULE_HPP
#define WINRULE_WINRULE_HPP

#include "winrule/core.hpp"
#include "winrule/csv.hpp"
#include "winrule/format.hpp"
#include "winrule/harness.hpp"
#include "winrule/krk.hpp"
#include "winrule/learners.hpp"
#include "winrule/postprocess.hpp"
#include "winrule/random.hpp"
#include "winrule/redundancy.hpp"
#include "winrule/sampling.hpp"
#include "winrule/windowing.hpp"

#endif  // WINRULE_WINRULE_HPP

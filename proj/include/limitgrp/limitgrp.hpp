#pragma once

#include "limitgrp/error.hpp"
#include "limitgrp/word.hpp"
#include "limitgrp/presentation.hpp"
#include "limitgrp/fox.hpp"
#include "limitgrp/folding.hpp"
#include "limitgrp/text_format.hpp"
#include "limitgrp/sl2c.hpp"
#include "limitgrp/neighborhood.hpp"
#include "limitgrp/representation.hpp"
#include "limitgrp/jacobian.hpp"
#include "limitgrp/sampler.hpp"
#include "limitgrp/splitting.hpp"
#include "limitgrp/twist_flow.hpp"
#include "limitgrp/lattice.hpp"
#include "limitgrp/resolution.hpp"
#include "limitgrp/pipeline.hpp"

#pragma once

#include "catgrp/error.hpp"
#include "catgrp/group.hpp"
#include "catgrp/builtins.hpp"
#include "catgrp/search.hpp"
#include "catgrp/xmod.hpp"
#include "catgrp/gpgd.hpp"
#include "catgrp/actor.hpp"
#include "catgrp/bridge.hpp"
#include "catgrp/actions.hpp"
#include "catgrp/text_format.hpp"
#include "catgrp/dot.hpp"

"""adaptabar: a headless, deterministic adaptive-toolbar engine.

The library models the mechanisms that make toolbars adapt to their users:
priority-scored space fitting with an overflow well, per-user usage
tracking, most-recently-used promotion, slide/stack/section interaction
machines, a procedural selection chain, and drag-drop plus quick-customize
reconfiguration. The session harness replays JSONL event traces into
canonical snapshots; the CLI adds replay, an NDJSON bridge, and reporting.
"""

from .canonical import canonical_bytes, canonical_json, digest
from .chain import (
    ChainState,
    OptionProvider,
    chain_clear_all,
    chain_options,
    chain_set_context,
    chain_set_value,
    chain_toggle_highlight,
    new_chain,
    providers_from_table,
)
from .core import (
    ControlSpec,
    DisplayMode,
    PlacementPolicy,
    ToolbarConfig,
    ToolbarDef,
    effective_width,
    register_control,
)
from .customize import (
    DragSource,
    MenuItem,
    ObjectOperation,
    PaletteSet,
    QcEntry,
    drag_add,
    menu_depth,
    qc_entries,
    qc_toggle,
    remove_control,
    set_context,
)
from .errors import (
    BadBoundaryError,
    BadPositionError,
    DefsParseError,
    DuplicateActionError,
    DuplicateControlIdError,
    EngineError,
    InvalidOptionError,
    MissingWidthError,
    ProfileParseError,
    TraceParseError,
    UnknownContextError,
    UnknownControlError,
    UnknownToolbarError,
)
from .fitting import (
    DisplayedSetChanged,
    LayoutEvent,
    NoChange,
    PlacedControl,
    ToolbarLayout,
    ToolbarState,
    apply_resize,
    fit,
    hover_hint,
    init_toolbar,
    layout_event,
    make_toolbar_state,
    refit,
)
from .machines import (
    AnimateSlide,
    PanelEvent,
    PointerAt,
    SectionRow,
    SlideMotion,
    SlidePanel,
    Sound,
    TickMs,
    ToolbarStack,
    drag_section_boundary,
    slide_step,
    stack_select,
)
from .priority import PriorityScore, UsageProfile, rank, record_activation, score
from .profiles import load_profile, profile_digest, save_profile
from .session import (
    Engine,
    EngineDefs,
    Metrics,
    SessionSnapshot,
    TraceEvent,
    parse_defs,
    parse_trace,
    parse_trace_event,
    read_defs,
    read_trace,
    replay_trace,
)

__version__ = "0.1.0"

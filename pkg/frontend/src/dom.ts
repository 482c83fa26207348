/**
 * DOM rendering of the view model.
 *
 * The whole view is rebuilt from scratch on every snapshot; at playground
 * scale that is cheap and guarantees the screen is always exactly the
 * engine's state. Buttons are absolutely positioned at the snapshot's
 * x-offsets, so the rendered intervals match the engine's layout verbatim.
 */

import type { TraceEvent } from "./protocol.js";
import type { ToolbarVM, ViewModel } from "./viewmodel.js";
import {
  clearAllClick,
  clickButton,
  dropMenuItem,
  dropSlot,
  dropdownPick,
  handleDrag,
  highlightToggle,
  paletteContextPick,
  pickOverflow,
  qcCheckbox,
  removeButton,
  tabClick,
  userSwitch,
} from "./gestures.js";

export interface MenuLeaf {
  path: string[];
  action: string;
}

export interface RenderOptions {
  onGesture: (event: TraceEvent) => void;
  menu: MenuLeaf[];
  contexts: string[];
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderToolbar(vm: ToolbarVM, options: RenderOptions): HTMLElement {
  const wrap = el("section", "toolbar-block");
  wrap.dataset.toolbar = vm.id;

  const title = el("h3", "toolbar-title", vm.id);
  wrap.appendChild(title);

  const row = el("div", "toolbar-row");
  row.dataset.toolbarRow = vm.id;
  row.style.width = `${vm.availableWidth}px`;

  for (const button of vm.buttons) {
    const node = el("button", "tb-button", button.showLabel ? undefined : "");
    node.type = "button";
    node.dataset.control = button.id;
    node.style.left = `${button.x}px`;
    node.style.width = `${button.width}px`;
    node.disabled = !button.enabled;
    if (button.hint) node.title = button.hint;
    node.textContent = button.showLabel ? button.label : button.label.slice(0, 2);
    node.addEventListener("click", () => options.onGesture(clickButton(button.id)));
    node.addEventListener("dblclick", () =>
      options.onGesture(removeButton(button.id)),
    );
    row.appendChild(node);
  }

  // menu items dropped on the row become new buttons at the pointer slot
  row.addEventListener("dragover", (event) => event.preventDefault());
  row.addEventListener("drop", (event) => {
    event.preventDefault();
    const payload = event.dataTransfer?.getData("application/json");
    if (!payload) return;
    const leaf = JSON.parse(payload) as MenuLeaf;
    const rect = row.getBoundingClientRect();
    const slot = dropSlot(vm.buttons, event.clientX - rect.left);
    options.onGesture(dropMenuItem(leaf.path, leaf.action, slot, vm.id));
  });
  wrap.appendChild(row);

  const controls = el("div", "toolbar-extras");

  const overflow = el("select", "well-dropdown");
  overflow.dataset.well = vm.id;
  const placeholder = el("option", undefined, `well (${vm.overflow.length})`);
  placeholder.value = "";
  overflow.appendChild(placeholder);
  for (const entry of vm.overflow) {
    const option = el("option", undefined, entry.label);
    option.value = entry.id;
    option.dataset.wellEntry = entry.id;
    overflow.appendChild(option);
  }
  overflow.addEventListener("change", () => {
    if (overflow.value) options.onGesture(pickOverflow(overflow.value));
  });
  controls.appendChild(overflow);

  const qc = el("details", "qc-menu");
  qc.appendChild(el("summary", undefined, "customize"));
  for (const entry of vm.qc) {
    const label = el("label", "qc-entry");
    const box = el("input");
    box.type = "checkbox";
    box.checked = entry.selected;
    box.dataset.qc = entry.id;
    box.addEventListener("change", () => options.onGesture(qcCheckbox(entry.id)));
    label.appendChild(box);
    label.appendChild(document.createTextNode(` ${entry.label}`));
    qc.appendChild(label);
  }
  controls.appendChild(qc);
  wrap.appendChild(controls);
  return wrap;
}

function renderSections(vm: ViewModel, options: RenderOptions): HTMLElement {
  const row = el("div", "sections-row");
  vm.sections!.widths.forEach((width, index) => {
    const cell = el("div", "section-cell", `${width}`);
    cell.style.width = `${width}px`;
    cell.dataset.section = String(index);
    row.appendChild(cell);
    if (index < vm.sections!.widths.length - 1) {
      const handle = el("div", "section-handle");
      handle.dataset.boundary = String(index);
      let startX = 0;
      handle.addEventListener("pointerdown", (event) => {
        startX = event.clientX;
        const move = (ev: PointerEvent) => ev.preventDefault();
        const up = (ev: PointerEvent) => {
          window.removeEventListener("pointermove", move);
          window.removeEventListener("pointerup", up);
          options.onGesture(handleDrag(index, ev.clientX - startX));
        };
        window.addEventListener("pointermove", move);
        window.addEventListener("pointerup", up);
      });
      row.appendChild(handle);
    }
  });
  return row;
}

function renderChain(vm: ViewModel, options: RenderOptions): HTMLElement {
  const chain = vm.chain!;
  const wrap = el("div", "chain-row");
  wrap.appendChild(el("span", "chain-context", `context: ${chain.context}`));
  for (const dropdown of chain.dropdowns) {
    const select = el("select", "chain-select");
    select.dataset.chainPosition = String(dropdown.position);
    select.disabled = !dropdown.enabled;
    const blank = el("option", undefined, "--");
    blank.value = "";
    select.appendChild(blank);
    for (const option of dropdown.options) {
      const node = el("option", undefined, option);
      node.value = option;
      node.selected = option === dropdown.value;
      select.appendChild(node);
    }
    select.addEventListener("change", () => {
      if (select.value)
        options.onGesture(dropdownPick(dropdown.position, select.value));
    });
    wrap.appendChild(select);
  }
  const clear = el("button", "chain-clear", "clear all");
  clear.type = "button";
  clear.addEventListener("click", () => options.onGesture(clearAllClick()));
  wrap.appendChild(clear);
  const highlight = el("label", "chain-highlight");
  const box = el("input");
  box.type = "checkbox";
  box.checked = chain.highlight;
  box.dataset.highlight = "1";
  box.addEventListener("change", () => options.onGesture(highlightToggle()));
  highlight.appendChild(box);
  highlight.appendChild(document.createTextNode(" highlight selection"));
  wrap.appendChild(highlight);
  return wrap;
}

function renderMenuTree(options: RenderOptions): HTMLElement {
  const wrap = el("div", "menu-tree");
  wrap.appendChild(el("h3", undefined, "Menus (drag onto a toolbar)"));
  for (const leaf of options.menu) {
    const item = el("div", "menu-item", leaf.path.join(" › "));
    item.draggable = true;
    item.dataset.action = leaf.action;
    item.addEventListener("dragstart", (event) => {
      event.dataTransfer?.setData("application/json", JSON.stringify(leaf));
    });
    wrap.appendChild(item);
  }
  return wrap;
}

export function renderView(
  root: HTMLElement,
  vm: ViewModel,
  options: RenderOptions,
): void {
  root.textContent = "";

  const header = el("header", "topbar");
  header.appendChild(el("span", "user-badge", `user: ${vm.user}`));
  const userInput = el("input", "user-input");
  userInput.placeholder = "switch user…";
  userInput.addEventListener("keydown", (event) => {
    if (event.key === "Enter" && userInput.value.trim()) {
      options.onGesture(userSwitch(userInput.value.trim()));
    }
  });
  header.appendChild(userInput);
  if (vm.palettes) {
    const picker = el("select", "context-picker");
    for (const context of options.contexts) {
      const option = el("option", undefined, context);
      option.value = context;
      option.selected = context === vm.palettes.context;
      picker.appendChild(option);
    }
    picker.addEventListener("change", () =>
      options.onGesture(paletteContextPick(picker.value)),
    );
    header.appendChild(picker);
    header.appendChild(
      el(
        "span",
        "palette-line",
        `static: ${vm.palettes.static.join(", ")} | dynamic: ${vm.palettes.dynamic.join(", ")}`,
      ),
    );
  }
  root.appendChild(header);

  if (vm.stackTabs.length) {
    const tabs = el("nav", "stack-tabs");
    for (const tab of vm.stackTabs) {
      const node = el("button", tab.selected ? "tab selected" : "tab", tab.id);
      node.type = "button";
      node.dataset.tab = tab.id;
      node.addEventListener("click", () => options.onGesture(tabClick(tab.id)));
      tabs.appendChild(node);
    }
    root.appendChild(tabs);
  }

  if (vm.sections) root.appendChild(renderSections(vm, options));

  // in a stack only the selected toolbar is visible; it covers the others
  const selected = vm.stackTabs.find((tab) => tab.selected)?.id ?? null;
  for (const toolbar of vm.toolbars) {
    const block = renderToolbar(toolbar, options);
    if (selected !== null && toolbar.id !== selected) block.hidden = true;
    root.appendChild(block);
  }

  const slide = el("div", "slide-panel");
  slide.dataset.slidePanel = "1";
  slide.style.width = `${vm.slide.panelWidth}px`;
  slide.style.left = `${vm.slide.offset - vm.slide.panelWidth}px`;
  slide.dataset.progress = String(vm.slide.progress);
  slide.appendChild(el("span", undefined, "slide-out tray"));
  root.appendChild(slide);

  if (vm.chain) root.appendChild(renderChain(vm, options));
  root.appendChild(renderMenuTree(options));

  const metrics = el("aside", "metrics-panel");
  metrics.appendChild(el("h3", undefined, "Metrics"));
  const list = el("dl");
  const entries: [string, number][] = [
    ["churn", vm.metrics.churn],
    ["bar activations", vm.metrics.bar_activations],
    ["well activations", vm.metrics.well_activations],
    ["disabled activations", vm.metrics.disabled_activations],
    ["clicks saved", vm.metrics.clicks_saved],
  ];
  for (const [name, value] of entries) {
    list.appendChild(el("dt", undefined, name));
    const dd = el("dd", undefined, String(value));
    dd.dataset.metric = name.replaceAll(" ", "_");
    list.appendChild(dd);
  }
  metrics.appendChild(list);
  if (vm.errors.length) {
    const errors = el("div", "error-log");
    errors.appendChild(el("h4", undefined, `errors (${vm.errors.length})`));
    for (const entry of vm.errors.slice(-5)) {
      errors.appendChild(
        el("div", "error-line", `#${entry.seq} ${entry.event}: ${entry.error}`),
      );
    }
    metrics.appendChild(errors);
  }
  root.appendChild(metrics);
}

/** Displayed control ids per toolbar as rendered, for round-trip checks. */
export function renderedDisplayedIds(root: HTMLElement, toolbarId: string): string[] {
  const row = root.querySelector(`[data-toolbar-row="${toolbarId}"]`);
  if (!row) return [];
  return Array.from(row.querySelectorAll<HTMLElement>("[data-control]")).map(
    (node) => node.dataset.control ?? "",
  );
}

// DOM wiring. One in-flight request per session: inputs are disabled while
// a request is pending, so clicks can never reorder.

import { ApiClient, ApiError, type ApiState } from "./api.js";
import { buildViewState, type ViewState } from "./state.js";
import {
  renderBadge,
  renderCVectorTable,
  renderDiagramSvg,
  renderWord,
} from "./render.js";

interface AppElements {
  matrixInput: HTMLTextAreaElement;
  loadButton: HTMLButtonElement;
  undoButton: HTMLButtonElement;
  errorBox: HTMLElement;
  diagramBox: HTMLElement;
  tableBox: HTMLElement;
  badgeBox: HTMLElement;
  wordBox: HTMLElement;
}

export class App {
  private view: ViewState | null = null;
  private busy = false;

  constructor(
    private readonly api: ApiClient,
    private readonly el: AppElements,
  ) {
    el.loadButton.addEventListener("click", () => void this.loadMatrix());
    el.undoButton.addEventListener("click", () => void this.undo());
    el.diagramBox.addEventListener("click", (event) => {
      const vertex = (event.target as Element).closest("[data-vertex]");
      if (vertex) {
        const k = Number(vertex.getAttribute("data-vertex"));
        void this.clickVertex(k);
      }
    });
  }

  private setBusy(busy: boolean): void {
    this.busy = busy;
    this.el.loadButton.disabled = busy;
    this.el.undoButton.disabled = busy || !this.view;
    this.el.diagramBox.classList.toggle("disabled", busy);
  }

  private showError(message: string): void {
    this.el.errorBox.textContent = message;
  }

  private apply(state: ApiState, sessionId: string, flash?: number): void {
    this.view = buildViewState(sessionId, state);
    this.el.diagramBox.innerHTML = renderDiagramSvg(this.view, flash);
    this.el.tableBox.innerHTML = renderCVectorTable(this.view);
    this.el.badgeBox.innerHTML = renderBadge(this.view);
    this.el.wordBox.textContent = renderWord(this.view);
    this.showError("");
  }

  async loadMatrix(): Promise<void> {
    if (this.busy) return;
    let matrix: unknown;
    try {
      matrix = JSON.parse(this.el.matrixInput.value);
    } catch {
      this.showError("not valid JSON");
      return;
    }
    this.setBusy(true);
    try {
      const handle = await this.api.createSession(matrix);
      this.apply(handle.state, handle.id);
    } catch (err) {
      this.showError(err instanceof ApiError ? err.message : String(err));
    } finally {
      this.setBusy(false);
    }
  }

  async clickVertex(k: number): Promise<void> {
    if (this.busy || !this.view) return;
    this.setBusy(true);
    try {
      const state = await this.api.mutate(this.view.sessionId, k);
      this.apply(state, this.view.sessionId, k);
    } catch (err) {
      this.showError(err instanceof ApiError ? err.message : String(err));
    } finally {
      this.setBusy(false);
    }
  }

  async undo(): Promise<void> {
    if (this.busy || !this.view) return;
    this.setBusy(true);
    try {
      const state = await this.api.undo(this.view.sessionId);
      this.apply(state, this.view.sessionId);
    } catch (err) {
      this.showError(err instanceof ApiError ? err.message : String(err));
    } finally {
      this.setBusy(false);
    }
  }
}

export function mount(baseUrl: string): App {
  const byId = (id: string) => {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing #${id}`);
    return node;
  };
  return new App(new ApiClient(baseUrl), {
    matrixInput: byId("matrix-input") as HTMLTextAreaElement,
    loadButton: byId("load-button") as HTMLButtonElement,
    undoButton: byId("undo-button") as HTMLButtonElement,
    errorBox: byId("error-box"),
    diagramBox: byId("diagram-box"),
    tableBox: byId("table-box"),
    badgeBox: byId("badge-box"),
    wordBox: byId("word-box"),
  });
}

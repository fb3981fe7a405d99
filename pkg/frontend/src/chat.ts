/**
 * Advisor Chat Panel
 *
 * Persona selectors, a template picker plus free-question field, a live
 * prompt-framing preview, and the conversation transcript. The panel never
 * talks to the network itself: submitting raises `onAsk` with the payload
 * to send, and the owner re-renders the thread once the answer (or the
 * failure) has been appended.
 */

import type { Expertise, Goal, LanguageRegister, PersonaDocument } from "./documents.js";
import { fmtCost, fmtImpact } from "./format.js";
import {
  EXPERTISE_OPTIONS,
  GOAL_OPTIONS,
  REGISTER_OPTIONS,
  personaLabel,
  personaPreamble,
} from "./persona.js";
import type { ChatThread, ChatTurn } from "./viewmodel.js";

/** Question templates the inference endpoint accepts by name. */
export const TEMPLATE_OPTIONS: readonly string[] = [
  "categorize",
  "tradeoff_analysis",
  "solution_brief",
  "expertise_tailored",
  "stakeholder_goal",
];

/** What the user asked for: exactly one of template or question is set. */
export interface AskPayload {
  template?: string;
  question?: string;
}

export interface ChatHandlers {
  onAsk(payload: AskPayload): void;
  onPersonaChange(persona: PersonaDocument): void;
}

export interface ChatPanel {
  element: HTMLElement;
  /** Re-render the transcript and sync persona controls and preview. */
  renderThread(thread: ChatThread): void;
  /** Disable submission while a request is in flight. */
  setBusy(busy: boolean): void;
  /** Persona currently chosen in the controls. */
  readPersona(): PersonaDocument;
}

function selectControl(
  field: string,
  values: readonly string[],
  onChange: () => void,
): HTMLSelectElement {
  const select = document.createElement("select");
  select.setAttribute("data-field", field);
  for (const value of values) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent = value;
    select.appendChild(option);
  }
  select.addEventListener("change", onChange);
  return select;
}

function renderTurn(turn: ChatTurn): HTMLLIElement {
  const item = document.createElement("li");
  item.className = `turn turn-${turn.kind}`;

  const question = document.createElement("p");
  question.className = "turn-question";
  question.textContent = turn.question;
  item.appendChild(question);

  const tag = document.createElement("p");
  tag.className = "persona-tag";
  tag.textContent = personaLabel(turn.persona);
  item.appendChild(tag);

  if (turn.kind === "report") {
    const response = document.createElement("div");
    response.className = "response-text";
    response.textContent = turn.report.response_text;
    item.appendChild(response);

    if (turn.report.cited_rows.length > 0) {
      const cited = document.createElement("ul");
      cited.className = "cited-rows";
      for (const row of turn.report.cited_rows) {
        const entry = document.createElement("li");
        entry.textContent =
          `Solution ${row.number}: total cost ${fmtCost(row.total_cost)} M$ · ` +
          `environmental impact ${fmtImpact(row.environmental_impact)}`;
        cited.appendChild(entry);
      }
      item.appendChild(cited);
    }
  } else {
    const message = document.createElement("p");
    message.className = "turn-error-message";
    message.textContent = turn.message;
    item.appendChild(message);
  }
  return item;
}

export function createChatPanel(handlers: ChatHandlers): ChatPanel {
  const element = document.createElement("section");
  element.className = "chat";

  const readPersona = (): PersonaDocument => ({
    expertise: expertiseSelect.value as Expertise,
    goal: goalSelect.value as Goal,
    language_register: registerSelect.value as LanguageRegister,
  });

  const refreshPreview = (): void => {
    preview.textContent = personaPreamble(readPersona());
  };

  const onPersonaControl = (): void => {
    refreshPreview();
    handlers.onPersonaChange(readPersona());
  };

  const expertiseSelect = selectControl("expertise", EXPERTISE_OPTIONS, onPersonaControl);
  const goalSelect = selectControl("goal", GOAL_OPTIONS, onPersonaControl);
  const registerSelect = selectControl("language_register", REGISTER_OPTIONS, onPersonaControl);

  const personaControls = document.createElement("div");
  personaControls.className = "persona-controls";
  personaControls.append(expertiseSelect, goalSelect, registerSelect);
  element.appendChild(personaControls);

  const templateSelect = document.createElement("select");
  templateSelect.className = "template-picker";
  const freeform = document.createElement("option");
  freeform.value = "";
  freeform.textContent = "free question";
  templateSelect.appendChild(freeform);
  for (const name of TEMPLATE_OPTIONS) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    templateSelect.appendChild(option);
  }

  const questionInput = document.createElement("input");
  questionInput.className = "question-input";
  questionInput.type = "text";
  questionInput.placeholder = "Ask about the front…";

  const sendButton = document.createElement("button");
  sendButton.type = "submit";
  sendButton.className = "send";
  sendButton.textContent = "Ask";

  const form = document.createElement("form");
  form.className = "ask-form";
  form.append(templateSelect, questionInput, sendButton);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    if (sendButton.disabled) return;
    const template = templateSelect.value;
    const question = questionInput.value.trim();
    if (template !== "") {
      handlers.onAsk({ template });
    } else if (question !== "") {
      handlers.onAsk({ question });
    }
  });
  element.appendChild(form);

  const previewCaption = document.createElement("p");
  previewCaption.className = "preview-caption";
  previewCaption.textContent = "Framing sent with every prompt:";
  const preview = document.createElement("pre");
  preview.className = "prompt-preview";
  element.append(previewCaption, preview);

  const thread = document.createElement("ol");
  thread.className = "thread";
  element.appendChild(thread);

  refreshPreview();

  return {
    element,

    renderThread(next: ChatThread) {
      expertiseSelect.value = next.persona.expertise;
      goalSelect.value = next.persona.goal;
      registerSelect.value = next.persona.language_register;
      refreshPreview();
      thread.replaceChildren();
      for (const turn of next.turns) {
        thread.appendChild(renderTurn(turn));
      }
    },

    setBusy(busy: boolean) {
      sendButton.disabled = busy;
    },

    readPersona,
  };
}

import type { AnswerResponse, ModelProvider } from "./protocol.js";

/**
 * Deterministic stand-in for a real reading-comprehension model, so the
 * bridge (and its clients) can be exercised without downloading weights.
 *
 * Answering heuristic: take the question's trailing content phrase and echo
 * it back if the context contains it, shortening the phrase from the left
 * until something matches. No match (or no context) means unanswerable.
 */

const STOPWORDS = new Set([
  "who", "what", "when", "where", "why", "how", "which", "whom",
  "is", "are", "was", "were", "am", "be", "been", "being",
  "has", "have", "had", "do", "does", "did",
  "can", "could", "will", "would", "shall", "should", "may", "might", "must",
  "a", "an", "the", "and", "or", "but", "not", "no",
  "in", "on", "at", "of", "to", "for", "from", "by", "with", "as",
  "it", "its", "this", "that", "these", "those", "long", "many", "much",
]);

function contentTail(question: string, maxTokens = 5): string[] {
  const tokens = question
    .replace(/[?.!]+\s*$/, "")
    .split(/\s+/)
    .filter((t) => t.length > 0);
  const tail: string[] = [];
  for (let i = tokens.length - 1; i >= 0 && tail.length < maxTokens; i--) {
    const bare = tokens[i].replace(/[^\p{L}\p{N}]/gu, "").toLowerCase();
    if (bare === "" || STOPWORDS.has(bare)) {
      if (tail.length > 0) break;
      continue; // skip trailing stopwords, then collect
    }
    tail.unshift(tokens[i]);
  }
  return tail;
}

function findPhrase(context: string, phrase: string[]): string | null {
  if (phrase.length === 0) return null;
  const pattern = phrase
    .map((t) => t.replace(/[.*+?^${}()|[\]\\]/g, "\\$&"))
    .join("\\s+");
  const match = context.match(new RegExp(pattern, "iu"));
  return match ? match[0] : null;
}

export function stubAnswer(question: string, context: string): AnswerResponse {
  if (context.trim() === "") {
    return { answer: "", unanswerable: true, confidence: 0 };
  }
  const tail = contentTail(question);
  for (let drop = 0; drop < tail.length; drop++) {
    const phrase = tail.slice(drop);
    const found = findPhrase(context, phrase);
    if (found !== null) {
      const confidence = phrase.length / tail.length;
      return { answer: found, unanswerable: false, confidence };
    }
  }
  return { answer: "", unanswerable: true, confidence: 0 };
}

export function stubQuestion(sentence: string, maskedSpan: string): string {
  let remainder = sentence.replace(/[?.!]+\s*$/, "");
  if (maskedSpan.trim() !== "") {
    const escaped = maskedSpan.trim().replace(/[.*+?^${}()|[\]\\]/g, "\\$&");
    remainder = remainder.replace(new RegExp(escaped, "i"), "").trim();
  }
  remainder = remainder.replace(/\s+/g, " ").replace(/^\W+|\W+$/g, "");
  if (remainder === "") {
    return "What is it?";
  }
  return `What ${remainder.charAt(0).toLowerCase()}${remainder.slice(1)}?`;
}

export class StubProvider implements ModelProvider {
  readonly name = "stub";

  ready(): boolean {
    return true;
  }

  async answer(question: string, context: string): Promise<AnswerResponse> {
    return stubAnswer(question, context);
  }

  async generateQuestion(sentence: string, maskedSpan: string): Promise<string> {
    return stubQuestion(sentence, maskedSpan);
  }
}

/**
 * Placeholder for a real pretrained model: stays in the loading state until
 * an adapter wires actual weights in, so /health reports 503 rather than
 * silently answering from a fake.
 */
export class PendingModelProvider implements ModelProvider {
  constructor(readonly name: string) {}

  ready(): boolean {
    return false;
  }

  async answer(): Promise<AnswerResponse> {
    throw new Error(`model ${this.name} is not loaded`);
  }
}

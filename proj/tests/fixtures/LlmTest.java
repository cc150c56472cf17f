import static org.junit.jupiter.api.Assertions.*;
class LlmTest {
@Test
public void testGetOptionValueWithDefaultValue() {
    assertEquals("default", commandLine.getOptionValue("test", "default"));
}
}

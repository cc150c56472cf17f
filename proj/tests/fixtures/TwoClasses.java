class FirstTest {
    @Test
    void one() {
        assertTrue(ready());
    }
}

class SecondTest {
    @Test
    void two() {
        if (flag) {
            fail("unexpected");
        }
    }
}

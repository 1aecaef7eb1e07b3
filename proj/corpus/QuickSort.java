/* Recursive in-place QuickSort over an int array. */
public class QuickSort {

    // Sorts array[left..right] in ascending order.
    public static void sort(int[] array, int left, int right) {
        int i = left;
        int j = right;
        int middle = array[(left + right) / 2];
        do {
            while (array[i] < middle)
                i++;
            while (array[j] > middle)
                j--;
            if (i <= j) {
                // swap the out-of-place pair
                int temp = array[i];
                array[i] = array[j];
                array[j] = temp;
                i++;
                j--;
            }
        } while (i <= j);
        if (left < j)
            sort(array, left, j);
        if (i < right)
            sort(array, i, right);
    }
}
